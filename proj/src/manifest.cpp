#include "cgeo/manifest.hpp"

#include <fstream>

#include "cgeo/errors.hpp"
#include "cgeo/parser.hpp"

namespace cgeo {

namespace {

Scalar parse_at(const std::string& text, const ChartPtr& chart, const std::string& path) {
  try {
    return parse_scalar(text, chart);
  } catch (const ParseError& e) {
    throw DomainError("manifest:" + path + ": " + e.what());
  }
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

Json components_json(const ScalarVec& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(scalar_text(s));
  return arr;
}

Json matrix_json(const ScalarMat& m) {
  Json arr = Json::array();
  for (const auto& row : m) arr.push_back(components_json(row));
  return arr;
}

Json distribution_json(const Frame& frame, Block block) {
  Json d;
  Json names = Json::array();
  Json gens = Json::array();
  for (std::size_t i : frame.block_indices(block)) {
    names.push_back(frame.names[i]);
    gens.push_back(components_json(frame.fields[i].components()));
  }
  d["names"] = names;
  d["generators"] = gens;
  return d;
}

ScalarVec parse_components(const Json& arr, const ChartPtr& chart, const std::string& path,
                           std::size_t expect) {
  if (!arr.is_array() || arr.size() != expect)
    throw DomainError("manifest:" + path + ": expected an array of " + std::to_string(expect) +
                      " expressions");
  ScalarVec out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string())
      throw DomainError("manifest:" + path + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(parse_at(arr[i].get<std::string>(), chart,
                           path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ScalarMat parse_matrix(const Json& arr, const ChartPtr& chart, const std::string& path,
                       std::size_t expect) {
  if (!arr.is_array() || arr.size() != expect)
    throw DomainError("manifest:" + path + ": expected a " + std::to_string(expect) + "x" +
                      std::to_string(expect) + " matrix of expressions");
  ScalarMat out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(parse_components(arr[i], chart, path + "[" + std::to_string(i) + "]", expect));
  return out;
}

const Json& need(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key))
    throw DomainError("manifest:" + path + ": missing field '" + key + "'");
  return obj.at(key);
}

std::vector<std::string> string_list(const Json& arr, const std::string& path) {
  if (!arr.is_array()) throw DomainError("manifest:" + path + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw DomainError("manifest:" + path + ": expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

} // namespace

Json export_manifest(const CatalogEntry& entry) {
  Json doc;
  doc["schema_version"] = 1;
  doc["name"] = entry.id;

  const ChartPtr& chart =
      entry.contact ? entry.contact->chart() : entry.symplectic->chart();
  Json chart_j;
  chart_j["backend"] = chart->is_lie_frame() ? "lie-frame" : "chart";
  Json coords = Json::array();
  for (const auto& n : chart->names()) coords.push_back(n);
  chart_j["coords"] = coords;
  if (chart->has_relation()) {
    chart_j["relation"] = Scalar::from_poly(chart, chart->relation()).to_string();
  } else if (!chart->is_lie_frame()) {
    chart_j["relation"] = nullptr;
  }
  if (chart->is_lie_frame()) {
    Json brackets = Json::array();
    std::size_t dim = chart->dimension();
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        const auto& table = chart->bracket_constants(i, j);
        Json result;
        for (std::size_t k = 0; k < dim; ++k)
          if (table[k] != 0) result[chart->names()[k]] = rat_to_string(table[k]);
        if (!result.empty())
          brackets.push_back(Json{{"left", chart->names()[i]},
                                  {"right", chart->names()[j]},
                                  {"result", result}});
      }
    chart_j["brackets"] = brackets;
  }
  doc["chart"] = chart_j;

  Json st;
  Json dists;
  if (entry.contact) {
    const auto& s = *entry.contact;
    st["type"] = "contact";
    st["eta"] = components_json(s.eta().components());
    st["xi"] = components_json(s.xi().components());
    st["phi"] = matrix_json(s.phi_raw().matrix());
    st["g"] = matrix_json(s.metric().matrix());
    dists["L"] = distribution_json(s.frame(), Block::L);
    dists["Q"] = distribution_json(s.frame(), Block::Q);
  } else {
    const auto& s = *entry.symplectic;
    st["type"] = "symplectic";
    st["omega"] = matrix_json(s.omega().components());
    dists["F"] = distribution_json(s.frame(), Block::L);
    dists["G"] = distribution_json(s.frame(), Block::Q);
  }
  doc["structure"] = st;
  doc["distributions"] = dists;
  return doc;
}

Subject load_manifest(const Json& doc) {
  if (!doc.is_object()) throw DomainError("manifest: expected a JSON object");
  if (need(doc, "schema_version", "/").get<int>() != 1)
    throw DomainError("manifest:/schema_version: unsupported version");
  Subject subject;
  subject.name = doc.contains("name") && doc["name"].is_string()
                     ? doc["name"].get<std::string>()
                     : "manifest";

  const Json& chart_j = need(doc, "chart", "/");
  std::string backend = need(chart_j, "backend", "/chart").get<std::string>();
  std::vector<std::string> coords = string_list(need(chart_j, "coords", "/chart"),
                                                "/chart/coords");
  ChartPtr chart;
  if (backend == "chart") {
    if (chart_j.contains("relation") && !chart_j["relation"].is_null()) {
      auto ambient = Chart::coordinates(coords);
      Scalar rel = parse_at(chart_j["relation"].get<std::string>(), ambient, "/chart/relation");
      if (!(rel.den().is_constant()))
        throw DomainError("manifest:/chart/relation: relation must be polynomial");
      chart = Chart::embedded(coords, rel.num() * (Rat(1) / rel.den().constant_value()));
    } else {
      chart = Chart::coordinates(coords);
    }
  } else if (backend == "lie-frame") {
    std::size_t dim = coords.size();
    std::vector<std::vector<std::vector<Rat>>> table(
        dim, std::vector<std::vector<Rat>>(dim, std::vector<Rat>(dim, Rat(0))));
    auto idx = [&](const std::string& name, const std::string& path) -> std::size_t {
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == name) return i;
      throw DomainError("manifest:" + path + ": unknown frame element '" + name + "'");
    };
    const Json& brackets = need(chart_j, "brackets", "/chart");
    if (!brackets.is_array()) throw DomainError("manifest:/chart/brackets: expected an array");
    for (std::size_t b = 0; b < brackets.size(); ++b) {
      std::string path = "/chart/brackets[" + std::to_string(b) + "]";
      const Json& entry = brackets[b];
      std::size_t i = idx(need(entry, "left", path).get<std::string>(), path + "/left");
      std::size_t j = idx(need(entry, "right", path).get<std::string>(), path + "/right");
      const Json& result = need(entry, "result", path);
      for (auto it = result.begin(); it != result.end(); ++it) {
        std::size_t k = idx(it.key(), path + "/result");
        Rat v;
        try {
          v = rat_from_string(it.value().get<std::string>());
        } catch (const std::exception&) {
          throw DomainError("manifest:" + path + "/result/" + it.key() +
                            ": expected a rational literal");
        }
        table[i][j][k] = v;
        table[j][i][k] = -v;
      }
    }
    chart = Chart::lie_frame(coords, std::move(table));
  } else {
    throw DomainError("manifest:/chart/backend: expected 'chart' or 'lie-frame'");
  }
  subject.lie_frame = chart->is_lie_frame();
  std::size_t dim = chart->dimension();

  const Json& st = need(doc, "structure", "/");
  std::string type = need(st, "type", "/structure").get<std::string>();
  const Json& dists = need(doc, "distributions", "/");

  auto load_block = [&](const char* key) {
    const Json& d = need(dists, key, "/distributions");
    std::string path = std::string("/distributions/") + key;
    std::vector<std::string> names = string_list(need(d, "names", path), path + "/names");
    const Json& gens = need(d, "generators", path);
    if (!gens.is_array() || gens.size() != names.size())
      throw DomainError("manifest:" + path + ": names and generators must have equal length");
    std::vector<VectorField> fields;
    for (std::size_t i = 0; i < gens.size(); ++i)
      fields.push_back(VectorField(
          chart,
          parse_components(gens[i], chart, path + "/generators[" + std::to_string(i) + "]",
                           dim)));
    return std::pair<std::vector<VectorField>, std::vector<std::string>>(fields, names);
  };

  if (type == "contact") {
    OneForm eta(chart, parse_components(need(st, "eta", "/structure"), chart, "/structure/eta",
                                        dim));
    VectorField xi(chart, parse_components(need(st, "xi", "/structure"), chart, "/structure/xi",
                                           dim));
    EndoField phi(chart, parse_matrix(need(st, "phi", "/structure"), chart, "/structure/phi",
                                      dim));
    MetricField g(chart, parse_matrix(need(st, "g", "/structure"), chart, "/structure/g", dim));
    auto [l_fields, l_names] = load_block("L");
    auto [q_fields, q_names] = load_block("Q");
    subject.contact = ContactMetricStructure(subject.name, chart, eta, xi, phi, g, l_fields,
                                             l_names, q_fields, q_names);
    if (chart->is_lie_frame()) {
      // record the Jacobi status; kept as a report check, not a load error
      for (std::size_t a = 0; a < dim && !subject.jacobi_failure; ++a)
        for (std::size_t b = a + 1; b < dim && !subject.jacobi_failure; ++b)
          for (std::size_t c = b + 1; c < dim && !subject.jacobi_failure; ++c) {
            VectorField ea = VectorField::basis(chart, a);
            VectorField eb = VectorField::basis(chart, b);
            VectorField ec = VectorField::basis(chart, c);
            VectorField jac = lie_bracket(ea, lie_bracket(eb, ec)) +
                              lie_bracket(eb, lie_bracket(ec, ea)) +
                              lie_bracket(ec, lie_bracket(ea, eb));
            if (!jac.is_zero())
              subject.jacobi_failure = "Jacobi fails on (" + coords[a] + "," + coords[b] + "," +
                                       coords[c] + ")";
          }
    }
  } else if (type == "symplectic") {
    TwoForm omega(chart, parse_matrix(need(st, "omega", "/structure"), chart, "/structure/omega",
                                      dim));
    auto [f_fields, f_names] = load_block("F");
    auto [g_fields, g_names] = load_block("G");
    subject.symplectic =
        SymplecticStructure(subject.name, chart, omega, f_fields, f_names, g_fields, g_names);
  } else {
    throw DomainError("manifest:/structure/type: expected 'contact' or 'symplectic'");
  }
  return subject;
}

Subject load_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open manifest file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw DomainError("manifest " + path + " is not valid JSON: " + e.what());
  }
  return load_manifest(doc);
}

Subject subject_from_catalog(const std::string& id) {
  CatalogEntry entry = make_catalog_entry(id);
  Subject subject;
  subject.name = entry.id;
  subject.contact = std::move(entry.contact);
  subject.symplectic = std::move(entry.symplectic);
  subject.jacobi_failure = entry.jacobi_failure;
  if (subject.contact)
    subject.lie_frame = subject.contact->chart()->is_lie_frame();
  return subject;
}

} // namespace cgeo
