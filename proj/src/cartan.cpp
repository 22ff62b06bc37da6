#include "tractor/cartan.hpp"

#include <map>
#include <sstream>

namespace tractor {

bool Section::is_zero() const {
  for (const auto& p : comp)
    if (!p.is_zero()) return false;
  return true;
}

Section Section::operator-() const {
  Section r;
  r.comp.reserve(comp.size());
  for (const auto& p : comp) r.comp.push_back(-p);
  return r;
}

Section& Section::operator+=(const Section& o) {
  if (comp.size() != o.comp.size()) throw structural_error("Section: dimension mismatch");
  for (size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
  return *this;
}

Section& Section::operator-=(const Section& o) {
  if (comp.size() != o.comp.size()) throw structural_error("Section: dimension mismatch");
  for (size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
  return *this;
}

Section Section::scaled(const Rational& c) const {
  Section r;
  r.comp.reserve(comp.size());
  for (const auto& p : comp) r.comp.push_back(p.scaled(c));
  return r;
}

Section Section::scaled(const Poly& f) const {
  Section r;
  r.comp.reserve(comp.size());
  for (const auto& p : comp) r.comp.push_back(p * f);
  return r;
}

SpanProjector::SpanProjector(const std::vector<RatVec>& basis, size_t ambient_dim) {
  if (basis.empty()) {
    empty_ = true;
    projector_ = Mat(ambient_dim, ambient_dim);
    return;
  }
  empty_ = false;
  Mat c = Mat::from_columns(basis);
  Mat ct = c.transposed();
  auto gram_inv = (ct * c).inverse();
  if (!gram_inv) throw structural_error("SpanProjector: dependent spanning set");
  projector_ = c * (*gram_inv) * ct;
}

bool SpanProjector::contains(const RatVec& v) const {
  if (empty_) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  return projector_ * v == v;
}

bool SpanProjector::contains(const Section& s) const {
  // bucket coefficient vectors by monomial
  std::map<Exponents, RatVec> buckets;
  size_t d = s.comp.size();
  for (size_t a = 0; a < d; ++a) {
    for (const auto& [e, c] : s.comp[a].terms()) {
      auto [it, inserted] = buckets.emplace(e, RatVec(d));
      it->second[a] = c;
    }
  }
  for (const auto& [e, vec] : buckets)
    if (!contains(vec)) return false;
  return true;
}

Model::Model(std::string name, LieAlgebraSpec algebra, SubalgebraSpec subalgebra,
             std::optional<GradingSpec> grading, std::vector<std::string> chart_coords,
             std::vector<RatVec> transversal, std::vector<Section> gauge,
             std::optional<std::vector<Section>> synthetic_kappa)
    : name_(std::move(name)),
      alg_(std::move(algebra)),
      sub_(std::move(subalgebra)),
      grading_(std::move(grading)),
      vars_(make_vars(std::move(chart_coords))),
      transversal_(std::move(transversal)),
      gauge_(std::move(gauge)) {
  precompute();
  validate();
  if (synthetic_kappa) {
    mode_ = CurvatureMode::Synthetic;
    if (synthetic_kappa->size() != chart_dim() * (chart_dim() - 1) / 2)
      throw structural_error("Model: synthetic curvature needs one section per i<j pair");
    kappa_.assign(chart_dim() * chart_dim(), zero_section());
    size_t idx = 0;
    for (size_t i = 0; i < chart_dim(); ++i)
      for (size_t j = i + 1; j < chart_dim(); ++j) {
        kappa_[kappa_index(i, j)] = (*synthetic_kappa)[idx];
        kappa_[kappa_index(j, i)] = -(*synthetic_kappa)[idx];
        ++idx;
      }
  } else {
    mode_ = CurvatureMode::Gauge;
    kappa_ = derive_curvature();
  }
}

void Model::precompute() {
  size_t d = alg_.dim();
  size_t n = vars_->size();
  if (transversal_.size() != n)
    throw structural_error("Model: transversal size must equal chart dimension");
  if (sub_.span.size() + n != d)
    throw structural_error("Model: dim p + chart dimension must equal dim g");

  std::vector<RatVec> adapted_cols = transversal_;
  for (const auto& p : sub_.span) adapted_cols.push_back(p);
  Mat adapted = Mat::from_columns(adapted_cols);
  auto inv = adapted.inverse();
  if (!inv) throw structural_error("Model: transversal + p is not a basis of g");
  proj_ = Mat(n, d);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j) proj_.at(i, j) = inv->at(i, j);

  for (size_t j = 0; j < n; ++j) dual_frame_.push_back(b_dual(alg_, proj_.row(j)));

  p_perp_ = orthogonal_complement(alg_, sub_);
  p_proj_ = SpanProjector(sub_.span, d);
  p_perp_proj_ = SpanProjector(p_perp_, d);

  // quotient coordinates: complete p_perp to a basis, invert, keep the rows
  // dual to the complementary part
  std::vector<RatVec> full = extend_to_basis(p_perp_, d);
  auto full_inv = Mat::from_columns(full).inverse();
  if (!full_inv) throw structural_error("Model: p-orthogonal completion failed");
  size_t q = d - p_perp_.size();
  quotient_rows_ = Mat(q, d);
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < d; ++j) quotient_rows_.at(i, j) = full_inv->at(p_perp_.size() + i, j);

  Mat s = Mat::from_columns(dual_frame_);
  Mat st = s.transposed();
  auto gram_inv = (st * s).inverse();
  if (!gram_inv) throw structural_error("Model: dual frame is dependent");
  rho_star_left_inv_ = (*gram_inv) * st;
}

void Model::validate() const {
  if (!is_subalgebra(alg_, sub_)) throw structural_error("Model: p is not a subalgebra");
  if (!check_coisotropic(alg_, sub_))
    throw structural_error("Model: p is not coisotropic");
  if (gauge_.size() != chart_dim())
    throw structural_error("Model: gauge needs one component per coordinate");
  for (size_t i = 0; i < gauge_.size(); ++i) {
    if (gauge_[i].dim() != dim()) throw structural_error("Model: gauge component dimension");
    Section diff = gauge_[i] - transversal_section(i);
    if (!p_proj_.contains(diff))
      throw structural_error("Model: gauge normalization broken at component " +
                             std::to_string(i + 1) + " (A_i - X_i must be p-valued)");
  }
}

std::vector<Section> Model::derive_curvature() const {
  size_t n = chart_dim();
  std::vector<Section> table(n * n, zero_section());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Section k;
      k.comp.reserve(dim());
      for (size_t a = 0; a < dim(); ++a)
        k.comp.push_back(gauge_[j].comp[a].diff(i) - gauge_[i].comp[a].diff(j));
      k += Section(bracket(alg_, gauge_[i].comp, gauge_[j].comp));
      table[kappa_index(i, j)] = k;
      table[kappa_index(j, i)] = -k;
    }
  }
  return table;
}

Section Model::kappa(size_t i, size_t j) const {
  if (i >= chart_dim() || j >= chart_dim())
    throw structural_error("Model::kappa: index out of range");
  if (i == j) return zero_section();
  return kappa_[kappa_index(i, j)];
}

Section Model::zero_section() const {
  Section s;
  s.comp.assign(dim(), Poly(vars_));
  return s;
}

Section Model::constant_section(const RatVec& v) const {
  if (v.size() != dim()) throw structural_error("Model: constant section dimension");
  Section s;
  s.comp.reserve(dim());
  for (const auto& c : v) s.comp.push_back(Poly::constant(vars_, c));
  return s;
}

std::string Model::section_str(const Section& s) const {
  std::ostringstream out;
  bool first = true;
  for (size_t a = 0; a < s.comp.size(); ++a) {
    if (s.comp[a].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string c = s.comp[a].str();
    if (c == "1")
      out << alg_.names()[a];
    else
      out << "(" << c << ")*" << alg_.names()[a];
  }
  if (first) out << "0";
  return out.str();
}

std::vector<Poly> mat_apply(const Mat& m, const std::vector<Poly>& v, const VarListPtr& vars) {
  if (m.cols() != v.size()) throw structural_error("mat_apply: shape mismatch");
  std::vector<Poly> out;
  out.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    Poly acc(vars);
    for (size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      acc += v[j].scaled(m.at(i, j));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

PolyVec anchor(const Model& m, const Section& e) {
  return mat_apply(m.transversal_projection(), e.comp, m.vars());
}

PolyVec field_bracket(const PolyVec& x, const PolyVec& y) {
  if (x.size() != y.size()) throw structural_error("field_bracket: dimension mismatch");
  PolyVec out;
  out.reserve(x.size());
  for (size_t k = 0; k < x.size(); ++k) {
    Poly acc = x.empty() ? Poly() : Poly(x[k].vars());
    for (size_t i = 0; i < x.size(); ++i) {
      if (!x[i].is_zero()) acc += x[i] * y[k].diff(i);
      if (!y[i].is_zero()) acc -= y[i] * x[k].diff(i);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

Section nabla_dir(const Model& m, size_t i, const Section& e) {
  if (i >= m.chart_dim()) throw structural_error("nabla_dir: coordinate index out of range");
  Section r;
  r.comp.reserve(m.dim());
  for (size_t a = 0; a < m.dim(); ++a) r.comp.push_back(e.comp[a].diff(i));
  r += Section(bracket(m.algebra(), m.gauge()[i].comp, e.comp));
  return r;
}

Section nabla(const Model& m, const PolyVec& x, const Section& e) {
  if (x.size() != m.chart_dim()) throw structural_error("nabla: field dimension mismatch");
  Section acc = m.zero_section();
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    acc += nabla_dir(m, i, e).scaled(x[i]);
  }
  return acc;
}

Section rho_star(const Model& m, const PolyForm& alpha) {
  if (alpha.degree() != 1) throw structural_error("rho_star: expects a 1-form");
  Section acc = m.zero_section();
  for (const auto& [idx, f] : alpha.components())
    acc += m.dual_frame_section(idx[0]).scaled(f);
  return acc;
}

Section d_op(const Model& m, const Poly& f) {
  Section acc = m.zero_section();
  for (size_t j = 0; j < m.chart_dim(); ++j) {
    Poly df = f.diff(j);
    if (df.is_zero()) continue;
    acc += m.dual_frame_section(j).scaled(df);
  }
  return acc;
}

Section kappa_sections(const Model& m, const Section& e1, const Section& e2) {
  PolyVec c = anchor(m, e1);
  PolyVec d = anchor(m, e2);
  Section acc = m.zero_section();
  for (size_t i = 0; i < m.chart_dim(); ++i)
    for (size_t j = i + 1; j < m.chart_dim(); ++j) {
      Poly coeff = c[i] * d[j] - c[j] * d[i];
      if (coeff.is_zero()) continue;
      acc += m.kappa(i, j).scaled(coeff);
    }
  return acc;
}

Section kappa_slot(const Model& m, const Section& e, size_t j) {
  PolyVec c = anchor(m, e);
  Section acc = m.zero_section();
  for (size_t i = 0; i < m.chart_dim(); ++i) {
    if (i == j || c[i].is_zero()) continue;
    acc += m.kappa(i, j).scaled(c[i]);
  }
  return acc;
}

Section atiyah_bracket(const Model& m, const Section& e1, const Section& e2) {
  Section r = nabla(m, anchor(m, e1), e2);
  r -= nabla(m, anchor(m, e2), e1);
  r -= Section(bracket(m.algebra(), e1.comp, e2.comp));
  r -= kappa_sections(m, e1, e2);
  return r;
}

std::vector<BianchiResidual> bianchi_residuals(const Model& m) {
  std::vector<BianchiResidual> out;
  size_t n = m.chart_dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Section r = m.zero_section();
        // d kappa
        for (size_t a = 0; a < m.dim(); ++a) {
          r.comp[a] += m.kappa(j, k).comp[a].diff(i);
          r.comp[a] -= m.kappa(i, k).comp[a].diff(j);
          r.comp[a] += m.kappa(i, j).comp[a].diff(k);
        }
        // [A ^ kappa]
        r += Section(bracket(m.algebra(), m.gauge()[i].comp, m.kappa(j, k).comp));
        r -= Section(bracket(m.algebra(), m.gauge()[j].comp, m.kappa(i, k).comp));
        r += Section(bracket(m.algebra(), m.gauge()[k].comp, m.kappa(i, j).comp));
        out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

bool is_p_valued(const Model& m, const Section& e) { return m.p_projector().contains(e); }

bool is_perp_valued(const Model& m, const Section& e) {
  return m.p_perp_projector().contains(e);
}

}  // namespace tractor
