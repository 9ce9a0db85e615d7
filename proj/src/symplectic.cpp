#include "cgeo/symplectic.hpp"

#include "cgeo/errors.hpp"

namespace cgeo {

namespace {

MetricField euclidean_metric(const ChartPtr& chart) {
  return MetricField(chart, identity_matrix(chart, chart->dimension()));
}

std::vector<std::vector<Rat>> sample_points(std::size_t n) {
  std::vector<std::vector<Rat>> pts;
  pts.emplace_back(n, Rat(0));
  pts.emplace_back(n, Rat(1, 2));
  std::vector<Rat> alt(n);
  for (std::size_t i = 0; i < n; ++i) alt[i] = Rat(i % 2 ? -1 : 1, 3 + static_cast<long>(i));
  pts.push_back(std::move(alt));
  return pts;
}

// leading principal minors positive at every non-pole sample point
bool positive_at_samples(const MetricField& g, std::string* witness) {
  const ChartPtr& chart = g.chart();
  std::size_t n = chart->dimension();
  bool sampled = false;
  for (const auto& pt : sample_points(chart->nvars())) {
    try {
      for (std::size_t k = 1; k <= n; ++k) {
        ScalarMat minor(k, ScalarVec(k, Scalar::zero(chart)));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = g.matrix()[i][j];
        Rat det = determinant(minor).evaluate(pt);
        if (det <= 0) {
          if (witness)
            *witness = "leading principal minor " + std::to_string(k) +
                       " evaluates to " + rat_to_string(det);
          return false;
        }
      }
      sampled = true;
    } catch (const DomainError&) {
      // pole at this sample; try the next one
    }
  }
  if (!sampled && witness) *witness = "no pole-free sample point found";
  return sampled;
}

} // namespace

SymplecticStructure::SymplecticStructure(std::string name, ChartPtr chart, TwoForm omega,
                                         std::vector<VectorField> f_generators,
                                         std::vector<std::string> f_names,
                                         std::vector<VectorField> g_generators,
                                         std::vector<std::string> g_names,
                                         std::optional<EndoField> j,
                                         std::optional<MetricField> g)
    : name_(std::move(name)),
      chart_(std::move(chart)),
      omega_(std::move(omega)),
      j_(std::move(j)),
      g_(std::move(g)) {
  if (chart_->is_lie_frame() || chart_->has_relation())
    throw DomainError("symplectic structures live on plain coordinate charts");
  std::size_t dim = chart_->dimension();
  if (dim % 2 != 0) throw DomainError("symplectic chart dimension must be even");
  std::size_t n = dim / 2;
  if (f_generators.size() != n || g_generators.size() != n)
    throw DomainError("bi-Lagrangian frame needs n generators per block");

  // closedness: cyclic sum of coordinate partials of the component matrix
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b)
      for (std::size_t c = b + 1; c < dim; ++c) {
        Scalar s = omega_.components()[b][c].derivative(a) +
                   omega_.components()[c][a].derivative(b) +
                   omega_.components()[a][b].derivative(c);
        if (!s.is_zero()) throw DomainError("omega is not closed");
      }
  if (determinant(omega_.components()).is_zero())
    throw DomainError("omega is degenerate");

  Frame frame;
  frame.chart = chart_;
  for (std::size_t i = 0; i < n; ++i) {
    frame.fields.push_back(f_generators[i]);
    frame.roles.push_back(FrameRole::F);
    frame.names.push_back(f_names[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    frame.fields.push_back(g_generators[i]);
    frame.roles.push_back(FrameRole::G);
    frame.names.push_back(g_names[i]);
  }
  expander_ = std::make_shared<const FrameExpander>(std::move(frame), euclidean_metric(chart_));

  if (j_ || g_) {
    if (!(j_ && g_)) throw DomainError("J and g must be supplied together");
    const Frame& fr = expander_->frame();
    for (const auto& f : fr.fields) {
      VectorField defect = j_->apply(j_->apply(f)) + f;
      if (!defect.is_zero()) throw DomainError("J^2 != -id");
    }
    for (const auto& a : fr.fields)
      for (const auto& b : fr.fields) {
        Scalar defect = g_->apply(a, b) + omega_.apply(a, j_->apply(b));
        if (!defect.is_zero()) throw DomainError("g(V,W) != -omega(V,JW)");
      }
    std::string witness;
    if (!positive_at_samples(*g_, &witness))
      throw DomainError("metric is not positive at sample points: " + witness);
  }
}

Distribution SymplecticStructure::f_distribution() const {
  Distribution d;
  for (std::size_t i : frame().block_indices(Block::L)) d.generators.push_back(frame().fields[i]);
  return d;
}

Distribution SymplecticStructure::g_distribution() const {
  Distribution d;
  for (std::size_t i : frame().block_indices(Block::Q)) d.generators.push_back(frame().fields[i]);
  return d;
}

bool lagrangian_check(const SymplecticStructure& s, const Distribution& d) {
  if (d.rank() != s.lagrangian_rank())
    throw DomainError("rank mismatch: a Lagrangian distribution on a 2n-manifold has rank n");
  if (!is_independent(d)) throw DomainError("distribution generators are dependent");
  for (std::size_t i = 0; i < d.generators.size(); ++i)
    for (std::size_t j = i + 1; j < d.generators.size(); ++j)
      if (!s.omega().apply(d.generators[i], d.generators[j]).is_zero()) return false;
  return true;
}

namespace {

/// ω-analogue of the contact H operator: the pairing runs over the whole
/// frame since there is no Reeb direction.
class OmegaSolver {
public:
  explicit OmegaSolver(const SymplecticStructure& s) : s_(s) {
    const Frame& fr = s.frame();
    std::size_t m = fr.size();
    ScalarMat pairing(m, ScalarVec(m, Scalar::zero(s.chart())));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        pairing[r][c] = s.omega().apply(fr.fields[c], fr.fields[r]);
    if (determinant(pairing).is_zero())
      throw DomainError("omega pairing is degenerate on the frame");
    inv_ = invert(pairing);
  }

  VectorField solve(const VectorField& v, const VectorField& w) const {
    const Frame& fr = s_.frame();
    std::size_t m = fr.size();
    ScalarVec rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
      const VectorField& z = fr.fields[r];
      rhs[r] = v.apply_to(s_.omega().apply(w, z)) - s_.omega().apply(w, lie_bracket(v, z));
    }
    ScalarVec c = mat_vec(inv_, rhs);
    VectorField out = VectorField::zero(s_.chart());
    for (std::size_t i = 0; i < m; ++i) out = out + fr.fields[i] * c[i];
    return out;
  }

private:
  const SymplecticStructure& s_;
  ScalarMat inv_;
};

void require_symplectic_blocks(const SymplecticStructure& s, const Distribution& f,
                               const Distribution& g) {
  auto fi = s.frame().block_indices(Block::L);
  auto gi = s.frame().block_indices(Block::Q);
  if (f.generators.size() != fi.size() || g.generators.size() != gi.size())
    throw DomainError("distributions do not match the frame blocks");
  for (std::size_t i = 0; i < fi.size(); ++i)
    if (!(f.generators[i] == s.frame().fields[fi[i]]))
      throw DomainError("F generators must be the frame's F block");
  for (std::size_t i = 0; i < gi.size(); ++i)
    if (!(g.generators[i] == s.frame().fields[gi[i]]))
      throw DomainError("G generators must be the frame's G block");
}

} // namespace

FrameConnection bi_lagrangian(const SymplecticStructure& s, const Distribution& f,
                              const Distribution& g) {
  if (!lagrangian_check(s, f) || !lagrangian_check(s, g))
    throw DomainError("bi-Lagrangian connection needs two Lagrangian distributions");
  require_symplectic_blocks(s, f, g);

  const Frame& fr = s.frame();
  std::size_t m = fr.size();
  OmegaSolver solver(s);
  std::vector<std::vector<ScalarVec>> gamma(
      m, std::vector<ScalarVec>(m, ScalarVec(m, Scalar::zero(s.chart()))));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Block target = fr.roles[j] == FrameRole::F ? Block::L : Block::Q;
      VectorField value;
      if (fr.roles[i] == fr.roles[j]) {
        value = s.expander()->project(solver.solve(fr.fields[i], fr.fields[j]), target);
      } else {
        value = s.expander()->project(lie_bracket(fr.fields[i], fr.fields[j]), target);
      }
      gamma[i][j] = s.expander()->expand(value);
    }
  FrameConnection conn(s.expander(), std::move(gamma), "bilag");
  if (!check_hess_axioms(conn, s, f, g).overall())
    throw EngineError("bi-Lagrangian construction violates the Hess axioms");
  return conn;
}

AxiomReport check_hess_axioms(const FrameConnection& c, const SymplecticStructure& s,
                              const Distribution& f, const Distribution& g) {
  require_symplectic_blocks(s, f, g);
  AxiomReport report;
  report.subject = s.name() + "/" + c.name();
  const Frame& fr = s.frame();
  std::size_t m = fr.size();
  auto f_idx = fr.block_indices(Block::L);
  auto g_idx = fr.block_indices(Block::Q);
  auto in_set = [](const std::vector<std::size_t>& v, std::size_t x) {
    for (auto e : v)
      if (e == x) return true;
    return false;
  };

  auto& c1 = report.add("hess-omega-parallel");
  if (!table3_is_zero(covariant_derivative_twoform(c, s.omega()))) {
    c1.pass = false;
    c1.witness = "nabla omega != 0";
  }

  auto& c2 = report.add("hess-preserves-f");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j : f_idx)
      for (std::size_t k = 0; k < m; ++k)
        if (!in_set(f_idx, k) && !c.gamma(i, j)[k].is_zero() && c2.pass) {
          c2.pass = false;
          c2.witness = "Gamma(" + fr.names[i] + "," + fr.names[j] + ")^" + fr.names[k];
        }

  auto& c3 = report.add("hess-preserves-g");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j : g_idx)
      for (std::size_t k = 0; k < m; ++k)
        if (!in_set(g_idx, k) && !c.gamma(i, j)[k].is_zero() && c3.pass) {
          c3.pass = false;
          c3.witness = "Gamma(" + fr.names[i] + "," + fr.names[j] + ")^" + fr.names[k];
        }

  auto& c4 = report.add("hess-mixed-torsion");
  for (std::size_t a : f_idx)
    for (std::size_t b : g_idx) {
      VectorField t = c.frame_derivative(a, b) - c.frame_derivative(b, a) -
                      lie_bracket(fr.fields[a], fr.fields[b]);
      if (!t.is_zero() && c4.pass) {
        c4.pass = false;
        c4.witness = "T(" + fr.names[a] + "," + fr.names[b] + ") = " + t.to_string();
      }
    }
  return report;
}

KahlerResult kahler_from_flat_bilagrangian(const SymplecticStructure& s, const Distribution& f,
                                           const Distribution& g) {
  const Frame& fr = s.frame();
  std::size_t m = fr.size();
  std::size_t n = s.lagrangian_rank();
  Scalar minus_half = Scalar::constant(s.chart(), Rat(-1, 2));

  // Darboux frame hypothesis
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!s.omega().apply(fr.fields[i], fr.fields[j]).is_zero() ||
          !s.omega().apply(fr.fields[n + i], fr.fields[n + j]).is_zero())
        throw DomainError("frame blocks are not omega-isotropic");
      Scalar expected = (i == j) ? minus_half : Scalar::zero(s.chart());
      if (!(s.omega().apply(fr.fields[i], fr.fields[n + j]) - expected).is_zero())
        throw DomainError("frame is not a Darboux frame (omega(F_i,G_j) != -1/2 delta)");
    }

  FrameConnection bl = bi_lagrangian(s, f, g);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!bl.curvature(fr.fields[i], fr.fields[j], fr.fields[k]).is_zero())
          throw DomainError("flatness hypothesis violated: bi-Lagrangian curvature != 0");

  // J in frame indices: J F_i = G_i, J G_i = -F_i; conjugate to coordinates
  ScalarMat basis(s.chart()->dimension(), ScalarVec(m, Scalar::zero(s.chart())));
  for (std::size_t col = 0; col < m; ++col)
    for (std::size_t row = 0; row < s.chart()->dimension(); ++row)
      basis[row][col] = fr.fields[col][row];
  ScalarMat j_frame(m, ScalarVec(m, Scalar::zero(s.chart())));
  for (std::size_t i = 0; i < n; ++i) {
    j_frame[n + i][i] = Scalar::constant(s.chart(), Rat(1));
    j_frame[i][n + i] = Scalar::constant(s.chart(), Rat(-1));
  }
  EndoField j(s.chart(), mat_mul(mat_mul(basis, j_frame), invert(basis)));

  // g(V,W) = -omega(V, JW)
  ScalarMat gmat(m, ScalarVec(m, Scalar::zero(s.chart())));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Scalar v = Scalar::zero(s.chart());
      for (std::size_t c = 0; c < m; ++c)
        v = v - s.omega().components()[a][c] * j.matrix()[c][b];
      gmat[a][b] = v;
    }
  MetricField metric(s.chart(), std::move(gmat));

  AxiomReport report;
  report.subject = s.name();

  auto& c1 = report.add("kahler-j-squared");
  for (const auto& fld : fr.fields) {
    VectorField defect = j.apply(j.apply(fld)) + fld;
    if (!defect.is_zero() && c1.pass) {
      c1.pass = false;
      c1.witness = "(J^2+id) = " + defect.to_string();
    }
  }

  auto& c2 = report.add("kahler-hermitian");
  for (const auto& a : fr.fields)
    for (const auto& b : fr.fields) {
      Scalar d1 = metric.apply(j.apply(a), j.apply(b)) - metric.apply(a, b);
      Scalar d2 = s.omega().apply(a, b) - metric.apply(a, j.apply(b));
      if ((!d1.is_zero() || !d2.is_zero()) && c2.pass) {
        c2.pass = false;
        c2.witness = "Hermitian identities fail";
      }
    }

  auto& c3 = report.add("kahler-positive-at-samples");
  std::string witness;
  if (!positive_at_samples(metric, &witness)) {
    c3.pass = false;
    c3.witness = witness;
  }

  bool j_parallel = true;
  for (const auto& row : covariant_derivative_endo(bl, j))
    for (const auto& v : row)
      if (!v.is_zero()) j_parallel = false;
  auto& c4 = report.add("kahler-j-parallel");
  c4.pass = j_parallel;

  bool g_parallel = table3_is_zero(covariant_derivative_metric(bl, metric));
  auto& c5 = report.add("kahler-g-parallel");
  c5.pass = g_parallel;

  auto& c6 = report.add("lemma-parallel-equivalence");
  c6.hypothesis_flags = {{"g-parallel", g_parallel}, {"j-parallel", j_parallel}};
  c6.pass = g_parallel == j_parallel;

  auto& c7 = report.add("kahler-levi-civita-coincides");
  Frame lc_frame = fr;
  auto lc_expander = std::make_shared<const FrameExpander>(std::move(lc_frame), metric);
  FrameConnection lc = koszul_levi_civita(lc_expander);
  c7.pass = bl.equals(lc);
  if (!c7.pass) c7.witness = bl.first_difference(lc);

  return KahlerResult{std::move(j), std::move(metric), std::move(report)};
}

AxiomReport check_hermitian_parallel_equivalence(const SymplecticStructure& s,
                                                 const Distribution& f, const Distribution& g,
                                                 const EndoField& j, const MetricField& metric) {
  FrameConnection bl = bi_lagrangian(s, f, g);
  bool g_parallel = table3_is_zero(covariant_derivative_metric(bl, metric));
  bool j_parallel = true;
  for (const auto& row : covariant_derivative_endo(bl, j))
    for (const auto& v : row)
      if (!v.is_zero()) j_parallel = false;
  AxiomReport report;
  report.subject = s.name();
  auto& c = report.add("lemma-parallel-equivalence");
  c.hypothesis_flags = {{"g-parallel", g_parallel}, {"j-parallel", j_parallel}};
  c.pass = g_parallel == j_parallel;
  if (!c.pass) c.witness = "nabla g and nabla J do not vanish together";
  return report;
}

} // namespace cgeo
