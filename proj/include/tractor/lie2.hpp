#pragma once

#include "tractor/courant.hpp"

namespace tractor {

// Element of the 2-term complex Omega^1(M) -> Gamma(E): degree 1 is a 1-form,
// degree 0 a section. Degree-1 elements embed through rho_star.
struct GradedElement {
  int degree = 0;
  Section section;  // degree 0
  PolyForm form;    // degree 1

  static GradedElement deg0(Section s) { return {0, std::move(s), {}}; }
  static GradedElement deg1(PolyForm w) { return {1, {}, std::move(w)}; }
};

// Skew-symmetrized bracket [[e1,e2]] = (e1 o e2 - e2 o e1)/2.
Section skew_bracket(const Model& m, const Section& e1, const Section& e2);
// Same bracket as e1 o e2 - (1/2) d<e1,e2>; must agree with skew_bracket.
Section skew_bracket_via_d(const Model& m, const Section& e1, const Section& e2);

// T(e1,e2,e3) = (1/6)(<[[e1,e2]],e3> + cyclic).
Poly t_form(const Model& m, const Section& e1, const Section& e2, const Section& e3);

// Jacobiator of the skew bracket, [[e1,[[e2,e3]]]] + cyclic.
Section script_jacobiator(const Model& m, const Section& e1, const Section& e2,
                          const Section& e3);
// The same element computed as J - dT.
Section script_jacobiator_jdt(const Model& m, const Section& e1, const Section& e2,
                              const Section& e3);

// Inverse of rho_star on its image: writes s as sum alpha_j s_j and returns
// alpha, or nullopt when s is not p-orthogonal-valued of dual-frame type.
std::optional<PolyForm> rho_star_pullback(const Model& m, const Section& s);

// l2 on two degree-0 elements is the skew bracket; on mixed degrees the
// result is pulled back through rho_star (it stays in the image because
// p-orthogonal sections form an ideal).
Section l2_deg0(const Model& m, const Section& e1, const Section& e2);
std::optional<PolyForm> l2_mixed(const Model& m, const Section& e, const PolyForm& alpha);

// l3 = script Jacobiator, pulled back to degree 1.
std::optional<PolyForm> l3(const Model& m, const Section& e1, const Section& e2,
                           const Section& e3);

// The printed closed form of l3 carries a bracket term B([e1,e2]_g,e3) inside
// the braced T-expression whose sign disagrees with the expansion of T; both
// readings are implemented and the equality check against the script
// Jacobiator decides which one is meant.
enum class L3Reading { AsPrinted, TConsistent };

Section l3_explicit_section(const Model& m, const Section& e1, const Section& e2,
                            const Section& e3, L3Reading reading = L3Reading::TConsistent);

}  // namespace tractor
