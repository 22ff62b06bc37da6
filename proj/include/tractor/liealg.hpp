#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tractor/linalg.hpp"
#include "tractor/poly.hpp"
#include "tractor/report.hpp"

namespace tractor {

// One nonzero structure constant: [X_i, X_j] contains c * X_k.
struct StructConst {
  size_t i, j, k;
  Rational c;
};

// Quadratic Lie algebra given by structure constants and an invariant
// symmetric bilinear form. The structure constants are the source of truth;
// no matrix representation is ever required.
class LieAlgebraSpec {
public:
  LieAlgebraSpec() = default;
  LieAlgebraSpec(std::vector<std::string> names, Mat form);

  size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Mat& form() const { return form_; }
  const std::vector<StructConst>& nonzero() const { return nonzero_; }

  const Rational& c(size_t i, size_t j, size_t k) const {
    return table_[(i * dim() + j) * dim() + k];
  }

  // Sets [X_i, X_j] += c X_k and the antisymmetric mirror.
  void add_bracket(size_t i, size_t j, size_t k, const Rational& c);
  // Raw single-entry setter; used by tests to build broken algebras.
  void set_c(size_t i, size_t j, size_t k, const Rational& c);

  size_t name_index(const std::string& name) const;  // throws if unknown

private:
  void rebuild_sparse();

  std::vector<std::string> names_;
  Mat form_;
  std::vector<Rational> table_;      // dense d^3
  std::vector<StructConst> nonzero_;
};

// Subalgebra given by a spanning set of coordinate columns.
struct SubalgebraSpec {
  std::vector<RatVec> span;
};

// Optional |l|-grading: integer degree per basis index, optional grading
// element in g_0.
struct GradingSpec {
  std::vector<int> degree;
  std::optional<RatVec> element;
};

// [x, y] for exact coordinate vectors.
RatVec bracket(const LieAlgebraSpec& g, const RatVec& x, const RatVec& y);
// Pointwise bracket for algebra-valued polynomial maps.
std::vector<Poly> bracket(const LieAlgebraSpec& g, const std::vector<Poly>& x,
                          const std::vector<Poly>& y);

// B(x, y) as exact scalars / polynomials.
Rational form_pair(const LieAlgebraSpec& g, const RatVec& x, const RatVec& y);
Poly form_pair(const LieAlgebraSpec& g, const std::vector<Poly>& x, const std::vector<Poly>& y);

// K[i][j] = trace(ad X_i . ad X_j).
Mat killing_form(const LieAlgebraSpec& g);

// Antisymmetry, Jacobi, form symmetry, nondegeneracy, ad-invariance; each
// violation is reported with its first witnessing triple.
std::vector<CheckResult> validate_quadratic(const LieAlgebraSpec& g);

// {x : B(x, p) = 0}, exact kernel computation.
std::vector<RatVec> orthogonal_complement(const LieAlgebraSpec& g, const SubalgebraSpec& p);

bool is_subalgebra(const LieAlgebraSpec& g, const SubalgebraSpec& p);

// p is coisotropic iff its orthogonal complement is contained in p.
bool check_coisotropic(const LieAlgebraSpec& g, const SubalgebraSpec& p);

std::vector<CheckResult> validate_grading(const LieAlgebraSpec& g, const SubalgebraSpec& p,
                                          const GradingSpec& gr);

// The unique s with B(s, x) = functional(x) for all x.
RatVec b_dual(const LieAlgebraSpec& g, const RatVec& functional);

}  // namespace tractor
