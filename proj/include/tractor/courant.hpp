#pragma once

#include <functional>

#include "tractor/cartan.hpp"

namespace tractor {

// Bracket operation bound to a model; checks take this so that deliberately
// corrupted brackets can be injected as negative controls.
using BracketFn = std::function<Section(const Section&, const Section&)>;

// Pointwise pseudo-metric <e1, e2> = B(e1, e2).
Poly pairing(const Model& m, const Section& e1, const Section& e2);

// B(e1, kappa(e2, .)): the section s with B(s, e3) = B(e1, kappa(e2, e3)).
// Values lie in the orthogonal complement of p, so rho kills them.
Section kappa_dual(const Model& m, const Section& e1, const Section& e2);

// B(nabla e1, e2): the section s with B(s, e3) = B(nabla_{rho(e3)} e1, e2).
Section nabla_dual(const Model& m, const Section& e1, const Section& e2);

// B(ea, kappa(eb, kappa(ec, .))): nested curvature dual; the inner slot output
// is fed back through the anchor.
Section nested_kappa_dual(const Model& m, const Section& ea, const Section& eb,
                          const Section& ec);

// beta = -[e1,e2]_g - kappa(e1,e2) + B(e2,kappa(e1,.)) - B(e1,kappa(e2,.)).
Section beta(const Model& m, const Section& e1, const Section& e2);

// The Dorfman bracket
//   e1 o e2 = nabla_{rho(e1)}e2 - nabla_{rho(e2)}e1 - [e1,e2]_g + B(nabla e1,e2)
//             - kappa(e1,e2) + B(e2,kappa(e1,.)) - B(e1,kappa(e2,.)).
Section dorfman(const Model& m, const Section& e1, const Section& e2);

// Same bracket assembled through the (nabla, beta) construction; must agree
// with dorfman exactly.
Section dorfman_via_beta(const Model& m, const Section& e1, const Section& e2);

// Variant without the two curvature duals; a Courant bracket whenever
// B(kappa(.,.),.) is totally skew.
Section alt_bracket(const Model& m, const Section& e1, const Section& e2);

BracketFn dorfman_fn(const Model& m);
BracketFn alt_bracket_fn(const Model& m);

// J(e1,e2,e3) = e1 o (e2 o e3) - (e1 o e2) o e3 - e2 o (e1 o e3).
Section jacobiator(const BracketFn& br, const Section& e1, const Section& e2,
                   const Section& e3);

// Closed-form Jacobiator:
//   J = -[e1, B(e3,k(e2,.)) - B(e2,k(e3,.))]_g + B(e3,k(e2,k(e1,.)))
//       - B(e2,k(e3,k(e1,.))) + cyclic.
Section jacobiator_formula(const Model& m, const Section& e1, const Section& e2,
                           const Section& e3);

// Directional derivative of a function along the anchor of nothing in
// particular: X f for a polynomial vector field X.
Poly field_apply(const PolyVec& x, const Poly& f);

// The 4-tensor P(e1,e2,e3,e4) = <J(e1,e2,e3), e4>. The basis table is filled
// from constant basis sections; eval_multilinear expands an arbitrary tuple
// over the table and is only valid because P is function-linear, which the
// pontryagin suite verifies against eval_direct.
class PontryaginTensor {
public:
  PontryaginTensor(const Model& m, BracketFn bracket);

  Poly eval_direct(const Section& e1, const Section& e2, const Section& e3,
                   const Section& e4) const;
  Poly eval_multilinear(const Section& e1, const Section& e2, const Section& e3,
                        const Section& e4) const;

  // Basis-table entry for increasing indices (zero Poly when absent).
  Poly basis_value(size_t a, size_t b, size_t c, size_t d) const;

  // Corruption hook for negative controls: flips the sign of one antisymmetric
  // table orbit.
  void flip_sign(size_t a, size_t b, size_t c, size_t d);

  bool table_is_zero() const { return entries_.empty(); }

private:
  struct Entry {
    size_t a, b, c, d;  // strictly increasing
    Poly value;
  };
  const Model* m_;
  BracketFn bracket_;
  std::vector<Entry> entries_;
};

// One evaluation of the coboundary-type operator on a 5-tuple:
//   DP(e1..e5) = sum_i (-1)^{i+1} rho(e_i) P(..no e_i..)
//              + sum_{i<j} (-1)^{i+j} P(e_i o e_j, ..no e_i, e_j..).
// The printed statement runs the first sum to i = 4; the identity that holds
// exactly runs it to i = 5 (see dp_truncation_defect in the tests), so
// full_first_sum defaults to true.
Poly dp_value(const Model& m,
              const std::function<Poly(const Section&, const Section&, const Section&,
                                       const Section&)>& p,
              const BracketFn& br, const std::vector<Section>& e, bool full_first_sum = true);

// H_{ijkl} = P(T_i, T_j, T_k, T_l) on constant transversal sections, as a
// polynomial 4-form on the chart.
PolyForm extract_h(const Model& m, const PontryaginTensor& p);

// Quotient coordinates modulo the p-orthogonal subbundle (representatives in
// a fixed complement); two sections agree in the quotient iff these match.
std::vector<Poly> quotient_coords(const Model& m, const Section& e);

// Total skewness of (e1,e2,e3) -> B(kappa(e1,e2),e3) over all basis triples.
// Returns the first violating triple, or nullopt when skew.
std::optional<std::array<size_t, 3>> skew_kappa_violation(const Model& m);

// Residuals of the three bracket axioms for an arbitrary bracket operation;
// all vanish exactly for the Dorfman bracket, and the negative controls feed
// corrupted brackets through the same functions.
PolyVec axiom1_residual(const Model& m, const BracketFn& br, const Section& e1,
                        const Section& e2);
Section axiom2_residual(const Model& m, const BracketFn& br, const Section& e);
Poly axiom3_residual(const Model& m, const BracketFn& br, const Section& e1,
                     const Section& e2, const Section& e3);

}  // namespace tractor
