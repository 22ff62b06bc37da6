#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tractor/form.hpp"
#include "tractor/liealg.hpp"

namespace tractor {

// Algebra-valued polynomial map on the chart; the computational stand-in for
// a section of the tractor bundle in the fixed trivialization.
struct Section {
  std::vector<Poly> comp;

  Section() = default;
  explicit Section(std::vector<Poly> c) : comp(std::move(c)) {}

  size_t dim() const { return comp.size(); }
  bool is_zero() const;

  Section operator-() const;
  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  friend Section operator+(Section a, const Section& b) { a += b; return a; }
  friend Section operator-(Section a, const Section& b) { a -= b; return a; }
  Section scaled(const Rational& c) const;
  Section scaled(const Poly& f) const;

  friend bool operator==(const Section& a, const Section& b) { return a.comp == b.comp; }
  friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }
};

// Exact membership test against a fixed constant subspace, via a rational
// projector (no numerical rank decisions).
class SpanProjector {
public:
  SpanProjector() = default;
  explicit SpanProjector(const std::vector<RatVec>& basis, size_t ambient_dim);
  bool contains(const RatVec& v) const;
  bool contains(const Section& s) const;  // every monomial coefficient vector

private:
  bool empty_ = true;
  Mat projector_;
};

enum class CurvatureMode { Gauge, Synthetic };

// A coisotropic Cartan geometry in one local trivialization: quadratic Lie
// algebra, coisotropic subalgebra p, chart, transversal complement of p, and
// the normalized gauge potential A_i = X_i + (p-valued part). The curvature
// is derived from the gauge unless supplied synthetically.
class Model {
public:
  Model(std::string name, LieAlgebraSpec algebra, SubalgebraSpec subalgebra,
        std::optional<GradingSpec> grading, std::vector<std::string> chart_coords,
        std::vector<RatVec> transversal, std::vector<Section> gauge,
        std::optional<std::vector<Section>> synthetic_kappa = std::nullopt);

  const std::string& name() const { return name_; }
  const LieAlgebraSpec& algebra() const { return alg_; }
  const SubalgebraSpec& subalgebra() const { return sub_; }
  const std::optional<GradingSpec>& grading() const { return grading_; }
  const VarListPtr& vars() const { return vars_; }
  size_t chart_dim() const { return vars_->size(); }
  size_t dim() const { return alg_.dim(); }
  CurvatureMode mode() const { return mode_; }

  const std::vector<RatVec>& transversal() const { return transversal_; }
  const std::vector<Section>& gauge() const { return gauge_; }
  const std::vector<RatVec>& p_perp_basis() const { return p_perp_; }
  const SpanProjector& p_projector() const { return p_proj_; }
  const SpanProjector& p_perp_projector() const { return p_perp_proj_; }

  // kappa_{ij} with sign handling; kappa_{ii} = 0.
  Section kappa(size_t i, size_t j) const;

  Section zero_section() const;
  Section constant_section(const RatVec& v) const;
  Poly zero_poly() const { return Poly(vars_); }
  Poly poly_const(const Rational& c) const { return Poly::constant(vars_, c); }

  // Constant section of the i-th transversal basis vector (anchor = d/dx_i).
  Section transversal_section(size_t i) const { return constant_section(transversal_[i]); }
  // Constant dual-frame section s_j = b_dual(x -> j-th transversal coefficient);
  // these span the p-orthogonal complement and realize rho^*(dx_j).
  Section dual_frame_section(size_t j) const { return constant_section(dual_frame_[j]); }

  // Transversal-coefficient functionals (rows applied to sections give anchors).
  const Mat& transversal_projection() const { return proj_; }

  // Coordinates in a fixed complement of the p-orthogonal subspace; sections
  // equal modulo p-orthogonal values iff these rows agree on them.
  const Mat& quotient_rows() const { return quotient_rows_; }

  // Left inverse of the dual-frame matrix; recovers the 1-form alpha from
  // rho_star(alpha). rho_star is injective because the model is transitive.
  const Mat& rho_star_left_inverse() const { return rho_star_left_inv_; }

  std::string section_str(const Section& s) const;

private:
  void precompute();
  void validate() const;
  std::vector<Section> derive_curvature() const;
  size_t kappa_index(size_t i, size_t j) const { return i * chart_dim() + j; }

  std::string name_;
  LieAlgebraSpec alg_;
  SubalgebraSpec sub_;
  std::optional<GradingSpec> grading_;
  VarListPtr vars_;
  std::vector<RatVec> transversal_;
  std::vector<Section> gauge_;
  CurvatureMode mode_ = CurvatureMode::Gauge;
  std::vector<Section> kappa_;  // dense n*n table, antisymmetric

  Mat proj_;                     // n x d, transversal coefficients in adapted basis
  std::vector<RatVec> dual_frame_;
  std::vector<RatVec> p_perp_;
  SpanProjector p_proj_;
  SpanProjector p_perp_proj_;
  Mat quotient_rows_;
  Mat rho_star_left_inv_;
};

// Linear map applied pointwise to an algebra-valued polynomial vector.
std::vector<Poly> mat_apply(const Mat& m, const std::vector<Poly>& v, const VarListPtr& vars);

// Anchor rho(e): coefficients of the transversal part, as a polynomial
// vector field on the chart.
PolyVec anchor(const Model& m, const Section& e);

// Commutator of polynomial vector fields.
PolyVec field_bracket(const PolyVec& x, const PolyVec& y);

// Tractor connection in the gauge: nabla_{d/dx_i} e = de/dx_i + [A_i, e].
Section nabla_dir(const Model& m, size_t i, const Section& e);
Section nabla(const Model& m, const PolyVec& x, const Section& e);

// rho^*(alpha): unique section s with B(s, e) = alpha(rho(e)) for all e.
Section rho_star(const Model& m, const PolyForm& alpha);

// The operator B(df-dual): B(d_op(f), e) = rho(e) f.
Section d_op(const Model& m, const Poly& f);

// Curvature evaluated through the anchors of its section arguments.
Section kappa_sections(const Model& m, const Section& e1, const Section& e2);
// kappa(e, d/dx_j) as a section.
Section kappa_slot(const Model& m, const Section& e, size_t j);

// Lie algebroid bracket of the trivialized Atiyah algebroid:
// <e1,e2> = nabla_{rho(e1)} e2 - nabla_{rho(e2)} e1 - [e1,e2]_g - kappa(e1,e2).
Section atiyah_bracket(const Model& m, const Section& e1, const Section& e2);

// Residuals of d kappa + [A ^ kappa] per increasing index triple; all must
// vanish for a synthetic curvature to be admissible.
struct BianchiResidual {
  size_t i, j, k;
  Section value;
};
std::vector<BianchiResidual> bianchi_residuals(const Model& m);

bool is_p_valued(const Model& m, const Section& e);
bool is_perp_valued(const Model& m, const Section& e);

}  // namespace tractor
