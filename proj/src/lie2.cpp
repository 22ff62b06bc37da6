#include "tractor/lie2.hpp"

namespace tractor {

Section skew_bracket(const Model& m, const Section& e1, const Section& e2) {
  return (dorfman(m, e1, e2) - dorfman(m, e2, e1)).scaled(Rational(1, 2));
}

Section skew_bracket_via_d(const Model& m, const Section& e1, const Section& e2) {
  return dorfman(m, e1, e2) - d_op(m, pairing(m, e1, e2)).scaled(Rational(1, 2));
}

Poly t_form(const Model& m, const Section& e1, const Section& e2, const Section& e3) {
  const Section* e[3] = {&e1, &e2, &e3};
  Poly acc = m.zero_poly();
  for (int cyc = 0; cyc < 3; ++cyc) {
    const Section& a = *e[cyc];
    const Section& b = *e[(cyc + 1) % 3];
    const Section& c = *e[(cyc + 2) % 3];
    acc += pairing(m, skew_bracket(m, a, b), c);
  }
  return acc.scaled(Rational(1, 6));
}

Section script_jacobiator(const Model& m, const Section& e1, const Section& e2,
                          const Section& e3) {
  const Section* e[3] = {&e1, &e2, &e3};
  Section acc = m.zero_section();
  for (int cyc = 0; cyc < 3; ++cyc) {
    const Section& a = *e[cyc];
    const Section& b = *e[(cyc + 1) % 3];
    const Section& c = *e[(cyc + 2) % 3];
    acc += skew_bracket(m, a, skew_bracket(m, b, c));
  }
  return acc;
}

Section script_jacobiator_jdt(const Model& m, const Section& e1, const Section& e2,
                              const Section& e3) {
  Section j = jacobiator(dorfman_fn(m), e1, e2, e3);
  return j - d_op(m, t_form(m, e1, e2, e3));
}

std::optional<PolyForm> rho_star_pullback(const Model& m, const Section& s) {
  std::vector<Poly> alpha = mat_apply(m.rho_star_left_inverse(), s.comp, m.vars());
  PolyForm w = PolyForm::one_form(m.vars(), alpha);
  if (rho_star(m, w) != s) return std::nullopt;
  return w;
}

Section l2_deg0(const Model& m, const Section& e1, const Section& e2) {
  return skew_bracket(m, e1, e2);
}

std::optional<PolyForm> l2_mixed(const Model& m, const Section& e, const PolyForm& alpha) {
  return rho_star_pullback(m, skew_bracket(m, e, rho_star(m, alpha)));
}

std::optional<PolyForm> l3(const Model& m, const Section& e1, const Section& e2,
                           const Section& e3) {
  return rho_star_pullback(m, script_jacobiator(m, e1, e2, e3));
}

Section l3_explicit_section(const Model& m, const Section& e1, const Section& e2,
                            const Section& e3, L3Reading reading) {
  const Section* e[3] = {&e1, &e2, &e3};
  Rational bracket_sign = reading == L3Reading::AsPrinted ? Rational(1) : Rational(-1);
  Section acc = m.zero_section();
  for (int cyc = 0; cyc < 3; ++cyc) {
    const Section& a = *e[cyc];
    const Section& b = *e[(cyc + 1) % 3];
    const Section& c = *e[(cyc + 2) % 3];
    // curvature part, identical to the closed-form Jacobiator summand
    Section inner = kappa_dual(m, c, b) - kappa_dual(m, b, c);
    acc -= Section(bracket(m.algebra(), a.comp, inner.comp));
    acc += nested_kappa_dual(m, c, b, a);
    acc -= nested_kappa_dual(m, b, c, a);
    // braced scalar, removed through the d-dual
    Poly brace = pairing(m, nabla(m, anchor(m, a), b), c);
    brace -= pairing(m, nabla(m, anchor(m, b), a), c);
    brace += pairing(m, nabla(m, anchor(m, c), a), b).scaled(Rational(1, 2));
    brace -= pairing(m, nabla(m, anchor(m, c), b), a).scaled(Rational(1, 2));
    brace += form_pair(m.algebra(), bracket(m.algebra(), a.comp, b.comp), c.comp)
                 .scaled(bracket_sign);
    brace -= pairing(m, kappa_sections(m, a, b), c);
    brace += pairing(m, b, kappa_sections(m, a, c));
    brace -= pairing(m, a, kappa_sections(m, b, c));
    acc -= d_op(m, brace.scaled(Rational(1, 6)));
  }
  return acc;
}

}  // namespace tractor
