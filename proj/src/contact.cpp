#include "cgeo/contact.hpp"

#include "cgeo/errors.hpp"

namespace cgeo {

const char* const kClassificationCaveat =
    "classification is generic: flat/degenerate/non-degenerate are identically-zero "
    "tests over the whole chart, not pointwise verdicts";

EndoField tangential_projector(const ChartPtr& chart, const MetricField& ambient_metric) {
  if (!chart->has_relation()) return EndoField::identity(chart);
  std::size_t n = chart->dimension();
  ScalarVec df(n);
  for (std::size_t a = 0; a < n; ++a)
    df[a] = Scalar::from_poly(chart, chart->relation().derivative(a));
  ScalarMat ginv = invert(ambient_metric.matrix());
  ScalarVec normal = mat_vec(ginv, df); // N^a = g^{ab} dF_b
  Scalar df_n = Scalar::zero(chart);
  for (std::size_t a = 0; a < n; ++a) df_n = df_n + df[a] * normal[a];
  if (df_n.is_zero())
    throw DomainError("relation gradient is null w.r.t. the ambient metric");
  ScalarMat p = identity_matrix(chart, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p[a][b] = p[a][b] - normal[a] * df[b] / df_n;
  return EndoField(chart, std::move(p));
}

ContactMetricStructure::ContactMetricStructure(
    std::string name, ChartPtr chart, OneForm eta, VectorField xi, EndoField phi,
    MetricField g, std::vector<VectorField> l_generators, std::vector<std::string> l_names,
    std::vector<VectorField> q_generators, std::vector<std::string> q_names,
    std::string reeb_name)
    : name_(std::move(name)),
      chart_(std::move(chart)),
      eta_(std::move(eta)),
      xi_(std::move(xi)),
      phi_raw_(std::move(phi)),
      g_(std::move(g)) {
  std::size_t manifold_dim = chart_->dimension() - (chart_->has_relation() ? 1 : 0);
  if (manifold_dim % 2 == 0) throw DomainError("contact manifold dimension must be odd");
  std::size_t n = (manifold_dim - 1) / 2;
  if (l_generators.size() != n || q_generators.size() != n)
    throw DomainError("adapted frame needs n generators in each of L and Q");
  if (l_names.size() != n || q_names.size() != n)
    throw DomainError("frame naming does not match generator count");

  if (chart_->has_relation()) {
    if (!check_tangency(xi_, chart_)) throw DomainError("Reeb field is not tangent");
    for (const auto& v : l_generators)
      if (!check_tangency(v, chart_)) throw DomainError("L generator is not tangent");
    for (const auto& v : q_generators)
      if (!check_tangency(v, chart_)) throw DomainError("Q generator is not tangent");
    phi_ = tangential_projector(chart_, g_).compose(phi_raw_);
  } else {
    phi_ = phi_raw_;
  }
  deta_ = exterior_derivative(eta_);

  Frame frame;
  frame.chart = chart_;
  for (std::size_t i = 0; i < n; ++i) {
    frame.fields.push_back(l_generators[i]);
    frame.roles.push_back(FrameRole::L);
    frame.names.push_back(l_names[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    frame.fields.push_back(q_generators[i]);
    frame.roles.push_back(FrameRole::Q);
    frame.names.push_back(q_names[i]);
  }
  frame.fields.push_back(xi_);
  frame.roles.push_back(FrameRole::Reeb);
  frame.names.push_back(std::move(reeb_name));
  expander_ = std::make_shared<const FrameExpander>(std::move(frame), g_);
}

Distribution ContactMetricStructure::l_distribution() const {
  Distribution d;
  for (std::size_t i : frame().block_indices(Block::L)) d.generators.push_back(frame().fields[i]);
  return d;
}

Distribution ContactMetricStructure::q_distribution() const {
  Distribution d;
  for (std::size_t i : frame().block_indices(Block::Q)) d.generators.push_back(frame().fields[i]);
  return d;
}

namespace {

// First nonzero entry wins as witness; returns true when all vanish.
bool record_vector_zero(CheckResult& check, const ContactMetricStructure& s,
                        const VectorField& v, const std::string& label) {
  if (v.is_zero()) return true;
  if (check.pass) {
    check.pass = false;
    check.witness = label + " = " + v.to_string();
  }
  return false;
}

bool record_scalar_zero(CheckResult& check, const Scalar& value, const std::string& label) {
  if (value.is_zero()) return true;
  if (check.pass) {
    check.pass = false;
    check.witness = label + " = " + value.to_string();
  }
  return false;
}

} // namespace

AxiomReport validate_contact_metric(const ContactMetricStructure& s) {
  AxiomReport report;
  report.subject = s.name();
  const Frame& fr = s.frame();
  std::size_t m = fr.size();
  const auto& names = fr.names;
  const EndoField& phi = s.phi();
  const MetricField& g = s.metric();

  auto& c1 = report.add("eta(xi)=1");
  record_scalar_zero(c1, s.eta().apply(s.xi()) - Scalar::constant(s.chart(), Rat(1)),
                     "eta(xi) - 1");

  auto& c2 = report.add("deta(xi,.)=0");
  for (std::size_t i = 0; i < m; ++i)
    record_scalar_zero(c2, s.deta().apply(s.xi(), fr.fields[i]),
                       "deta(xi," + names[i] + ")");

  auto& c3 = report.add("phi^2=-id+eta(x)xi");
  for (std::size_t i = 0; i < m; ++i) {
    VectorField defect = phi.apply(phi.apply(fr.fields[i])) + fr.fields[i] -
                         s.xi() * s.eta().apply(fr.fields[i]);
    record_vector_zero(c3, s, defect, "(phi^2+id-eta(x)xi)(" + names[i] + ")");
  }

  auto& c4 = report.add("deta(v,w)=g(v,phi.w)");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      record_scalar_zero(c4,
                         s.deta().apply(fr.fields[i], fr.fields[j]) -
                             g.apply(fr.fields[i], phi.apply(fr.fields[j])),
                         "deta(" + names[i] + "," + names[j] + ") - g(" + names[i] +
                             ",phi." + names[j] + ")");

  auto& c5 = report.add("g(v,xi)=eta(v)");
  for (std::size_t i = 0; i < m; ++i)
    record_scalar_zero(c5, g.apply(fr.fields[i], s.xi()) - s.eta().apply(fr.fields[i]),
                       "g(" + names[i] + ",xi) - eta(" + names[i] + ")");

  auto& c6 = report.add("phi.xi=0");
  record_vector_zero(c6, s, phi.apply(s.xi()), "phi.xi");

  auto& c7 = report.add("eta(phi.v)=0");
  for (std::size_t i = 0; i < m; ++i)
    record_scalar_zero(c7, s.eta().apply(phi.apply(fr.fields[i])),
                       "eta(phi." + names[i] + ")");

  auto& c8 = report.add("g(phi.v,phi.w)=g(v,w)-eta(v)eta(w)");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      record_scalar_zero(
          c8,
          g.apply(phi.apply(fr.fields[i]), phi.apply(fr.fields[j])) -
              g.apply(fr.fields[i], fr.fields[j]) +
              s.eta().apply(fr.fields[i]) * s.eta().apply(fr.fields[j]),
          "pair (" + names[i] + "," + names[j] + ")");

  auto& c9 = report.add("g(phi.v,w)=-g(v,phi.w)");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      record_scalar_zero(c9,
                         g.apply(phi.apply(fr.fields[i]), fr.fields[j]) +
                             g.apply(fr.fields[i], phi.apply(fr.fields[j])),
                         "pair (" + names[i] + "," + names[j] + ")");
  return report;
}

EndoField compute_h(const ContactMetricStructure& s) {
  EndoField h = lie_derivative(s.xi(), s.phi()) * Scalar::constant(s.chart(), Rat(1, 2));
  const Frame& fr = s.frame();
  if (!h.apply(s.xi()).is_zero())
    throw DomainError("compute_h: h.xi != 0; structure is not a valid contact metric");
  for (std::size_t i = 0; i < fr.size(); ++i) {
    for (std::size_t j = 0; j < fr.size(); ++j) {
      Scalar sym = s.metric().apply(h.apply(fr.fields[i]), fr.fields[j]) -
                   s.metric().apply(fr.fields[i], h.apply(fr.fields[j]));
      if (!sym.is_zero())
        throw DomainError("compute_h: h is not g-symmetric; structure is not valid");
    }
    VectorField anti = s.phi().apply(h.apply(fr.fields[i])) + h.apply(s.phi().apply(fr.fields[i]));
    if (!anti.is_zero())
      throw DomainError("compute_h: h does not anticommute with phi; structure is not valid");
  }
  return h;
}

bool is_k_contact(const ContactMetricStructure& s) {
  EndoField h = compute_h(s);
  const Frame& fr = s.frame();
  bool h_vanishes = true;
  for (const auto& f : fr.fields)
    if (!h.apply(f).is_zero()) h_vanishes = false;

  bool killing = true;
  for (std::size_t i = 0; i < fr.size() && killing; ++i)
    for (std::size_t j = i; j < fr.size() && killing; ++j) {
      Scalar lg = s.xi().apply_to(s.metric().apply(fr.fields[i], fr.fields[j])) -
                  s.metric().apply(lie_bracket(s.xi(), fr.fields[i]), fr.fields[j]) -
                  s.metric().apply(fr.fields[i], lie_bracket(s.xi(), fr.fields[j]));
      if (!lg.is_zero()) killing = false;
    }
  if (h_vanishes != killing)
    throw EngineError("h = 0 and Killing criteria disagree for " + s.name());
  return h_vanishes;
}

std::vector<std::vector<VectorField>> normality_tensor(const ContactMetricStructure& s) {
  const Frame& fr = s.frame();
  std::size_t m = fr.size();
  const EndoField& phi = s.phi();
  EndoField phi2 = phi.compose(phi);
  std::vector<std::vector<VectorField>> n(m,
                                          std::vector<VectorField>(m, VectorField::zero(s.chart())));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const VectorField& v = fr.fields[i];
      const VectorField& w = fr.fields[j];
      // [phi,phi](V,W) + 2 deta(V,W) xi
      VectorField nij = phi2.apply(lie_bracket(v, w)) +
                        lie_bracket(phi.apply(v), phi.apply(w)) -
                        phi.apply(lie_bracket(phi.apply(v), w)) -
                        phi.apply(lie_bracket(v, phi.apply(w))) +
                        s.xi() * (Scalar::constant(s.chart(), Rat(2)) *
                                  s.deta().apply(v, w));
      n[i][j] = nij;
      n[j][i] = -nij;
    }
  return n;
}

bool legendrian_check(const ContactMetricStructure& s, const Distribution& d) {
  if (d.rank() != s.contact_rank())
    throw DomainError("rank mismatch: a Legendrian distribution on a (2n+1)-manifold has rank n");
  if (!is_independent(d)) throw DomainError("distribution generators are dependent");
  for (const auto& x : d.generators)
    if (!s.eta().apply(x).is_zero()) return false;
  for (std::size_t i = 0; i < d.generators.size(); ++i)
    for (std::size_t j = i + 1; j < d.generators.size(); ++j)
      if (!s.deta().apply(d.generators[i], d.generators[j]).is_zero()) return false;
  return true;
}

Distribution conjugate_distribution(const ContactMetricStructure& s, const Distribution& l) {
  if (!legendrian_check(s, l)) throw DomainError("conjugate of a non-Legendrian distribution");
  Distribution q;
  for (const auto& x : l.generators) q.generators.push_back(s.phi().apply(x));
  if (!legendrian_check(s, q))
    throw EngineError("conjugate distribution failed the Legendrian check");
  for (const auto& x : l.generators)
    for (const auto& y : q.generators)
      if (!s.metric().apply(x, y).is_zero())
        throw EngineError("conjugate distribution is not orthogonal to L");
  return q;
}

namespace {
bool in_span(const Distribution& d, const VectorField& v) {
  ScalarMat rows;
  for (const auto& g : d.generators) rows.push_back(g.components());
  std::size_t base = symbolic_rank(rows);
  rows.push_back(v.components());
  return symbolic_rank(rows) == base;
}
} // namespace

Scalar pang_form(const ContactMetricStructure& s, const Distribution& l, const VectorField& x,
                 const VectorField& xp) {
  if (!in_span(l, x) || !in_span(l, xp))
    throw DomainError("Pang form arguments must lie in the distribution");
  OneForm inner = lie_derivative(xp, s.eta());
  OneForm outer = lie_derivative(x, inner);
  return -outer.apply(s.xi());
}

std::string to_string(FoliationClass c) {
  switch (c) {
    case FoliationClass::Flat: return "flat";
    case FoliationClass::Degenerate: return "degenerate";
    case FoliationClass::NonDegenerate: return "non-degenerate";
  }
  return "?";
}

bool ClassificationResult::consistent() const {
  bool all_zero = true;
  for (const auto& w : witnesses)
    if (!w.is_zero()) all_zero = false;
  return (verdict == FoliationClass::Flat) == all_zero;
}

ClassificationResult classify_distribution(const ContactMetricStructure& s,
                                           const Distribution& l) {
  if (!legendrian_check(s, l)) throw DomainError("classification needs a Legendrian distribution");
  std::size_t n = l.rank();

  // conjugate frame (L, phi L, xi): valid for any Legendrian L
  Frame fr;
  fr.chart = s.chart();
  for (std::size_t i = 0; i < n; ++i) {
    fr.fields.push_back(l.generators[i]);
    fr.roles.push_back(FrameRole::L);
    fr.names.push_back("gen" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    fr.fields.push_back(s.phi().apply(l.generators[i]));
    fr.roles.push_back(FrameRole::Q);
    fr.names.push_back("phi.gen" + std::to_string(i + 1));
  }
  fr.fields.push_back(s.xi());
  fr.roles.push_back(FrameRole::Reeb);
  fr.names.push_back("xi");
  FrameExpander expander(fr, s.metric());

  ClassificationResult result;
  bool all_in = true;
  for (std::size_t i = 0; i < n; ++i) {
    VectorField bracket = lie_bracket(s.xi(), l.generators[i]);
    ScalarVec coeffs = expander.expand(bracket);
    for (std::size_t k = 0; k < n; ++k) coeffs[k] = Scalar::zero(s.chart()); // keep non-L part
    VectorField outside = expander.recombine(coeffs);
    if (!outside.is_zero()) all_in = false;
    result.witnesses.push_back(outside);
    result.witness_text.push_back("[xi,gen" + std::to_string(i + 1) +
                                  "] outside span = " + expander.format(coeffs));
  }
  if (all_in) {
    result.verdict = FoliationClass::Flat;
    return result;
  }
  // non-flat: split by the symbolic rank of the Pang form on the generators
  ScalarMat pang(n, ScalarVec(n, Scalar::zero(s.chart())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pang[i][j] = pang_form(s, l, l.generators[i], l.generators[j]);
  result.verdict = determinant(pang).is_zero() ? FoliationClass::Degenerate
                                               : FoliationClass::NonDegenerate;
  return result;
}

} // namespace cgeo
