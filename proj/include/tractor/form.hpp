#pragma once

#include <map>
#include <vector>

#include "tractor/poly.hpp"

namespace tractor {

// Component of a polynomial vector field: one Poly per chart coordinate.
using PolyVec = std::vector<Poly>;

// Differential k-form with Poly coefficients on a chart. Components are keyed
// by strictly increasing coordinate tuples; zero components are not stored.
// A degree-0 form is a single Poly keyed by the empty tuple.
class PolyForm {
public:
  using Index = std::vector<unsigned>;

  PolyForm() = default;
  PolyForm(VarListPtr vars, unsigned degree) : vars_(std::move(vars)), degree_(degree) {}

  static PolyForm scalar(const Poly& f);
  static PolyForm one_form(const VarListPtr& vars, const PolyVec& comps);

  unsigned degree() const { return degree_; }
  const VarListPtr& vars() const { return vars_; }
  size_t dim() const { return vars_ ? vars_->size() : 0; }
  const std::map<Index, Poly>& components() const { return comps_; }

  bool is_zero() const { return comps_.empty(); }
  Poly component(const Index& sorted_index) const;

  // Adds f * dx_{idx}; idx may be unsorted (the sign of the sorting permutation
  // is applied) and is dropped if it has a repeated coordinate.
  void add_term(Index idx, Poly f);

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { a += b; return a; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { a -= b; return a; }
  PolyForm scaled(const Rational& c) const;

  friend bool operator==(const PolyForm& a, const PolyForm& b);
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

  // Exterior derivative; satisfies d(d(w)) == 0 exactly.
  PolyForm d() const;

  // Pointwise evaluation on k polynomial vector fields.
  Poly evaluate(const std::vector<PolyVec>& fields) const;

  // Poincare homotopy operator for the star-shaped chart at the origin:
  // d(K(w)) + K(d(w)) == w for degree >= 1. Exactness witness for closed forms.
  PolyForm homotopy() const;

private:
  VarListPtr vars_;
  unsigned degree_ = 0;
  std::map<Index, Poly> comps_;
};

}  // namespace tractor
