#include "cgeo/tensor.hpp"

#include "cgeo/errors.hpp"

namespace cgeo {

VectorField::VectorField(ChartPtr chart, ScalarVec components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (comps_.size() != chart_->dimension())
    throw DomainError("vector field has wrong number of components");
  for (const auto& c : comps_) ensure_same_chart(c.chart(), chart_);
}

VectorField VectorField::zero(const ChartPtr& chart) {
  return VectorField(chart, ScalarVec(chart->dimension(), Scalar::zero(chart)));
}

VectorField VectorField::basis(const ChartPtr& chart, std::size_t index) {
  ScalarVec c(chart->dimension(), Scalar::zero(chart));
  c[index] = Scalar::constant(chart, Rat(1));
  return VectorField(chart, std::move(c));
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator+(const VectorField& o) const {
  ensure_same_chart(chart_, o.chart_);
  ScalarVec c(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) c[i] = comps_[i] + o.comps_[i];
  return VectorField(chart_, std::move(c));
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + (-o); }

VectorField VectorField::operator-() const {
  ScalarVec c(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) c[i] = -comps_[i];
  return VectorField(chart_, std::move(c));
}

VectorField VectorField::operator*(const Scalar& f) const {
  ScalarVec c(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) c[i] = comps_[i] * f;
  return VectorField(chart_, std::move(c));
}

bool VectorField::operator==(const VectorField& o) const { return (*this - o).is_zero(); }

Scalar VectorField::apply_to(const Scalar& f) const {
  ensure_same_chart(chart_, f.chart());
  if (chart_->is_lie_frame()) return Scalar::zero(chart_); // constants only
  Scalar r = Scalar::zero(chart_);
  for (std::size_t a = 0; a < comps_.size(); ++a) {
    if (comps_[a].is_zero()) continue;
    r = r + comps_[a] * f.derivative(a);
  }
  return r;
}

std::string VectorField::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ", ";
    out += comps_[i].to_string();
  }
  return out + "]";
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
  ensure_same_chart(v.chart(), w.chart());
  const ChartPtr& chart = v.chart();
  std::size_t n = chart->dimension();
  ScalarVec c(n, Scalar::zero(chart));
  if (chart->is_lie_frame()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (w[j].is_zero()) continue;
        const auto& table = chart->bracket_constants(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (table[k] == 0) continue;
          c[k] = c[k] + v[i] * w[j] * Scalar::constant(chart, table[k]);
        }
      }
    }
    return VectorField(chart, std::move(c));
  }
  for (std::size_t a = 0; a < n; ++a) c[a] = v.apply_to(w[a]) - w.apply_to(v[a]);
  VectorField result(chart, std::move(c));
  if (chart->has_relation() && check_tangency(v, chart) && check_tangency(w, chart) &&
      !check_tangency(result, chart))
    throw EngineError("bracket of tangent fields is not tangent");
  return result;
}

bool check_tangency(const VectorField& v, const ChartPtr& chart) {
  if (!chart->has_relation()) throw DomainError("chart has no relation");
  Scalar rel = Scalar::from_poly(chart, chart->relation());
  return v.apply_to(rel).is_zero();
}

OneForm::OneForm(ChartPtr chart, ScalarVec components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (comps_.size() != chart_->dimension())
    throw DomainError("one-form has wrong number of components");
}

Scalar OneForm::apply(const VectorField& v) const {
  ensure_same_chart(chart_, v.chart());
  Scalar r = Scalar::zero(chart_);
  for (std::size_t i = 0; i < comps_.size(); ++i) r = r + comps_[i] * v[i];
  return r;
}

bool OneForm::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

TwoForm::TwoForm(ChartPtr chart, ScalarMat components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  std::size_t n = chart_->dimension();
  if (comps_.size() != n) throw DomainError("two-form has wrong dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (comps_[i].size() != n) throw DomainError("two-form has wrong dimension");
    for (std::size_t j = 0; j <= i; ++j)
      if (!(comps_[i][j] + comps_[j][i]).is_zero())
        throw DomainError("two-form matrix is not antisymmetric");
  }
}

Scalar TwoForm::apply(const VectorField& v, const VectorField& w) const {
  ensure_same_chart(chart_, v.chart());
  ensure_same_chart(chart_, w.chart());
  Scalar r = Scalar::zero(chart_);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      if (comps_[i][j].is_zero()) continue;
      r = r + comps_[i][j] * v[i] * w[j];
    }
  }
  return r;
}

bool TwoForm::is_zero() const {
  for (const auto& row : comps_)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

EndoField::EndoField(ChartPtr chart, ScalarMat matrix)
    : chart_(std::move(chart)), mat_(std::move(matrix)) {
  std::size_t n = chart_->dimension();
  if (mat_.size() != n) throw DomainError("endomorphism matrix has wrong dimension");
  for (const auto& row : mat_)
    if (row.size() != n) throw DomainError("endomorphism matrix has wrong dimension");
}

EndoField EndoField::zero(const ChartPtr& chart) {
  std::size_t n = chart->dimension();
  return EndoField(chart, ScalarMat(n, ScalarVec(n, Scalar::zero(chart))));
}

EndoField EndoField::identity(const ChartPtr& chart) {
  return EndoField(chart, identity_matrix(chart, chart->dimension()));
}

VectorField EndoField::apply(const VectorField& v) const {
  ensure_same_chart(chart_, v.chart());
  return VectorField(chart_, mat_vec(mat_, v.components()));
}

EndoField EndoField::compose(const EndoField& o) const {
  ensure_same_chart(chart_, o.chart_);
  return EndoField(chart_, mat_mul(mat_, o.mat_));
}

EndoField EndoField::operator+(const EndoField& o) const {
  ensure_same_chart(chart_, o.chart_);
  ScalarMat m = mat_;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = m[i][j] + o.mat_[i][j];
  return EndoField(chart_, std::move(m));
}

EndoField EndoField::operator-(const EndoField& o) const {
  ensure_same_chart(chart_, o.chart_);
  ScalarMat m = mat_;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = m[i][j] - o.mat_[i][j];
  return EndoField(chart_, std::move(m));
}

EndoField EndoField::operator*(const Scalar& f) const {
  ScalarMat m = mat_;
  for (auto& row : m)
    for (auto& c : row) c = c * f;
  return EndoField(chart_, std::move(m));
}

bool EndoField::is_zero() const {
  for (const auto& row : mat_)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

MetricField::MetricField(ChartPtr chart, ScalarMat matrix)
    : chart_(std::move(chart)), mat_(std::move(matrix)) {
  std::size_t n = chart_->dimension();
  if (mat_.size() != n) throw DomainError("metric matrix has wrong dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (mat_[i].size() != n) throw DomainError("metric matrix has wrong dimension");
    for (std::size_t j = 0; j < i; ++j)
      if (!(mat_[i][j] - mat_[j][i]).is_zero())
        throw DomainError("metric matrix is not symmetric");
  }
}

Scalar MetricField::apply(const VectorField& v, const VectorField& w) const {
  ensure_same_chart(chart_, v.chart());
  ensure_same_chart(chart_, w.chart());
  Scalar r = Scalar::zero(chart_);
  for (std::size_t i = 0; i < mat_.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < mat_.size(); ++j) {
      if (mat_[i][j].is_zero()) continue;
      r = r + mat_[i][j] * v[i] * w[j];
    }
  }
  return r;
}

OneForm MetricField::lower(const VectorField& v) const {
  ensure_same_chart(chart_, v.chart());
  ScalarVec c(mat_.size(), Scalar::zero(chart_));
  for (std::size_t j = 0; j < mat_.size(); ++j)
    for (std::size_t i = 0; i < mat_.size(); ++i) c[j] = c[j] + mat_[i][j] * v[i];
  return OneForm(chart_, std::move(c));
}

TwoForm exterior_derivative(const OneForm& alpha) {
  const ChartPtr& chart = alpha.chart();
  std::size_t n = chart->dimension();
  ScalarMat d(n, ScalarVec(n, Scalar::zero(chart)));
  Scalar half = Scalar::constant(chart, Rat(1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    VectorField ei = VectorField::basis(chart, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorField ej = VectorField::basis(chart, j);
      Scalar val = half * (ei.apply_to(alpha.components()[j]) -
                           ej.apply_to(alpha.components()[i]) -
                           alpha.apply(lie_bracket(ei, ej)));
      d[i][j] = val;
      d[j][i] = -val;
    }
  }
  return TwoForm(chart, std::move(d));
}

EndoField lie_derivative(const VectorField& v, const EndoField& a) {
  const ChartPtr& chart = a.chart();
  std::size_t n = chart->dimension();
  ScalarMat m(n, ScalarVec(n, Scalar::zero(chart)));
  for (std::size_t j = 0; j < n; ++j) {
    VectorField ej = VectorField::basis(chart, j);
    VectorField col = lie_bracket(v, a.apply(ej)) - a.apply(lie_bracket(v, ej));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return EndoField(chart, std::move(m));
}

MetricField lie_derivative(const VectorField& v, const MetricField& g) {
  const ChartPtr& chart = g.chart();
  std::size_t n = chart->dimension();
  ScalarMat m(n, ScalarVec(n, Scalar::zero(chart)));
  std::vector<VectorField> basis;
  std::vector<VectorField> brackets;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(VectorField::basis(chart, i));
    brackets.push_back(lie_bracket(v, basis.back()));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar val = v.apply_to(g.apply(basis[i], basis[j])) -
                   g.apply(brackets[i], basis[j]) - g.apply(basis[i], brackets[j]);
      m[i][j] = val;
      m[j][i] = val;
    }
  return MetricField(chart, std::move(m));
}

OneForm lie_derivative(const VectorField& v, const OneForm& alpha) {
  const ChartPtr& chart = alpha.chart();
  std::size_t n = chart->dimension();
  ScalarVec c(n, Scalar::zero(chart));
  for (std::size_t j = 0; j < n; ++j) {
    VectorField ej = VectorField::basis(chart, j);
    c[j] = v.apply_to(alpha.components()[j]) - alpha.apply(lie_bracket(v, ej));
  }
  return OneForm(chart, std::move(c));
}

std::vector<std::size_t> Frame::block_indices(Block b) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    bool in_block = false;
    switch (b) {
      case Block::L: in_block = roles[i] == FrameRole::L || roles[i] == FrameRole::F; break;
      case Block::Q: in_block = roles[i] == FrameRole::Q || roles[i] == FrameRole::G; break;
      case Block::Reeb: in_block = roles[i] == FrameRole::Reeb; break;
      case Block::D:
        in_block = roles[i] == FrameRole::L || roles[i] == FrameRole::Q ||
                   roles[i] == FrameRole::F || roles[i] == FrameRole::G;
        break;
    }
    if (in_block) idx.push_back(i);
  }
  if (idx.empty()) throw DomainError("frame has no block with the requested role tag");
  return idx;
}

FrameExpander::FrameExpander(Frame frame, MetricField metric)
    : frame_(std::move(frame)), metric_(std::move(metric)) {
  std::size_t n = frame_.size();
  const ChartPtr& chart = frame_.chart;
  ensure_same_chart(chart, metric_.chart());
  ScalarMat gram(n, ScalarVec(n, Scalar::zero(chart)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram[i][j] = metric_.apply(frame_.fields[i], frame_.fields[j]);
      gram[j][i] = gram[i][j];
    }
  gram_det_ = determinant(gram);
  if (gram_det_.is_zero()) throw DomainError("frame Gram matrix is degenerate");
  gram_inv_ = invert(gram);
}

ScalarVec FrameExpander::expand(const VectorField& v) const {
  std::size_t n = frame_.size();
  ScalarVec rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = metric_.apply(v, frame_.fields[i]);
  ScalarVec coeffs = mat_vec(gram_inv_, rhs);
  if (!(recombine(coeffs) == v))
    throw DomainError("vector field is not in the span of the frame");
  return coeffs;
}

ScalarVec FrameExpander::expand_from_pairings(const ScalarVec& pairings) const {
  return mat_vec(gram_inv_, pairings);
}

VectorField FrameExpander::recombine(const ScalarVec& coeffs) const {
  VectorField r = VectorField::zero(frame_.chart);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r = r + frame_.fields[i] * coeffs[i];
  return r;
}

VectorField FrameExpander::project(const VectorField& v, Block block) const {
  ScalarVec coeffs = expand(v);
  VectorField r = VectorField::zero(frame_.chart);
  for (std::size_t i : frame_.block_indices(block)) r = r + frame_.fields[i] * coeffs[i];
  return r;
}

std::string FrameExpander::format(const ScalarVec& coeffs) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::string c = coeffs[i].to_string();
    if (!out.empty()) out += " + ";
    if (c == "1") {
      out += frame_.names[i];
    } else {
      bool atomic = c.find_first_of("+-") == std::string::npos || c[0] == '-';
      if (c.find_first_of("+-", 1) != std::string::npos) atomic = false;
      out += (atomic ? c : "(" + c + ")") + "*" + frame_.names[i];
    }
  }
  return out.empty() ? "0" : out;
}

ScalarVec frame_expand(const VectorField& v, const Frame& frame, const MetricField& metric) {
  return FrameExpander(frame, metric).expand(v);
}

VectorField project(const VectorField& v, const Frame& frame, const MetricField& metric,
                    Block block) {
  return FrameExpander(frame, metric).project(v, block);
}

namespace {
ScalarMat component_rows(const std::vector<VectorField>& fields) {
  ScalarMat m;
  for (const auto& f : fields) m.push_back(f.components());
  return m;
}
} // namespace

bool is_independent(const Distribution& d) {
  if (d.generators.empty()) return true;
  return symbolic_rank(component_rows(d.generators)) == d.generators.size();
}

bool is_integrable(const Distribution& d) {
  if (!is_independent(d))
    throw DomainError("distribution generators are not linearly independent");
  std::size_t k = d.generators.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      VectorField b = lie_bracket(d.generators[i], d.generators[j]);
      ScalarMat rows = component_rows(d.generators);
      rows.push_back(b.components());
      if (symbolic_rank(rows) != k) return false;
    }
  return true;
}

} // namespace cgeo
