#include "tractor/courant.hpp"

#include <algorithm>

namespace tractor {

Poly pairing(const Model& m, const Section& e1, const Section& e2) {
  return form_pair(m.algebra(), e1.comp, e2.comp);
}

Section kappa_dual(const Model& m, const Section& e1, const Section& e2) {
  Section acc = m.zero_section();
  for (size_t j = 0; j < m.chart_dim(); ++j) {
    Poly coeff = pairing(m, e1, kappa_slot(m, e2, j));
    if (coeff.is_zero()) continue;
    acc += m.dual_frame_section(j).scaled(coeff);
  }
  return acc;
}

Section nabla_dual(const Model& m, const Section& e1, const Section& e2) {
  Section acc = m.zero_section();
  for (size_t j = 0; j < m.chart_dim(); ++j) {
    Poly coeff = pairing(m, nabla_dir(m, j, e1), e2);
    if (coeff.is_zero()) continue;
    acc += m.dual_frame_section(j).scaled(coeff);
  }
  return acc;
}

Section nested_kappa_dual(const Model& m, const Section& ea, const Section& eb,
                          const Section& ec) {
  Section acc = m.zero_section();
  for (size_t j = 0; j < m.chart_dim(); ++j) {
    Poly coeff = pairing(m, ea, kappa_sections(m, eb, kappa_slot(m, ec, j)));
    if (coeff.is_zero()) continue;
    acc += m.dual_frame_section(j).scaled(coeff);
  }
  return acc;
}

Section beta(const Model& m, const Section& e1, const Section& e2) {
  Section r = -Section(bracket(m.algebra(), e1.comp, e2.comp));
  r -= kappa_sections(m, e1, e2);
  r += kappa_dual(m, e2, e1);
  r -= kappa_dual(m, e1, e2);
  return r;
}

Section dorfman(const Model& m, const Section& e1, const Section& e2) {
  Section r = nabla(m, anchor(m, e1), e2);
  r -= nabla(m, anchor(m, e2), e1);
  r -= Section(bracket(m.algebra(), e1.comp, e2.comp));
  r += nabla_dual(m, e1, e2);
  r -= kappa_sections(m, e1, e2);
  r += kappa_dual(m, e2, e1);
  r -= kappa_dual(m, e1, e2);
  return r;
}

Section dorfman_via_beta(const Model& m, const Section& e1, const Section& e2) {
  Section r = nabla(m, anchor(m, e1), e2);
  r -= nabla(m, anchor(m, e2), e1);
  r += nabla_dual(m, e1, e2);
  r += beta(m, e1, e2);
  return r;
}

Section alt_bracket(const Model& m, const Section& e1, const Section& e2) {
  Section r = nabla(m, anchor(m, e1), e2);
  r -= nabla(m, anchor(m, e2), e1);
  r += nabla_dual(m, e1, e2);
  r -= Section(bracket(m.algebra(), e1.comp, e2.comp));
  r -= kappa_sections(m, e1, e2);
  return r;
}

BracketFn dorfman_fn(const Model& m) {
  return [&m](const Section& a, const Section& b) { return dorfman(m, a, b); };
}

BracketFn alt_bracket_fn(const Model& m) {
  return [&m](const Section& a, const Section& b) { return alt_bracket(m, a, b); };
}

Section jacobiator(const BracketFn& br, const Section& e1, const Section& e2,
                   const Section& e3) {
  return br(e1, br(e2, e3)) - br(br(e1, e2), e3) - br(e2, br(e1, e3));
}

Section jacobiator_formula(const Model& m, const Section& e1, const Section& e2,
                           const Section& e3) {
  const Section* e[3] = {&e1, &e2, &e3};
  Section acc = m.zero_section();
  for (int cyc = 0; cyc < 3; ++cyc) {
    const Section& a = *e[cyc];
    const Section& b = *e[(cyc + 1) % 3];
    const Section& c = *e[(cyc + 2) % 3];
    Section inner = kappa_dual(m, c, b) - kappa_dual(m, b, c);
    acc -= Section(bracket(m.algebra(), a.comp, inner.comp));
    acc += nested_kappa_dual(m, c, b, a);
    acc -= nested_kappa_dual(m, b, c, a);
  }
  return acc;
}

Poly field_apply(const PolyVec& x, const Poly& f) {
  Poly acc(f.vars());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    acc += x[i] * f.diff(i);
  }
  return acc;
}

PontryaginTensor::PontryaginTensor(const Model& m, BracketFn bracket)
    : m_(&m), bracket_(std::move(bracket)) {
  size_t d = m.dim();
  std::vector<Section> basis;
  basis.reserve(d);
  for (size_t a = 0; a < d; ++a) {
    RatVec v(d);
    v[a] = Rational(1);
    basis.push_back(m.constant_section(v));
  }
  for (size_t a = 0; a < d; ++a)
    for (size_t b = a + 1; b < d; ++b)
      for (size_t c = b + 1; c < d; ++c) {
        Section j = jacobiator(bracket_, basis[a], basis[b], basis[c]);
        if (j.is_zero()) continue;
        for (size_t dd = c + 1; dd < d; ++dd) {
          Poly v = pairing(m, j, basis[dd]);
          if (!v.is_zero()) entries_.push_back({a, b, c, dd, std::move(v)});
        }
      }
}

Poly PontryaginTensor::eval_direct(const Section& e1, const Section& e2, const Section& e3,
                                   const Section& e4) const {
  return pairing(*m_, jacobiator(bracket_, e1, e2, e3), e4);
}

Poly PontryaginTensor::eval_multilinear(const Section& e1, const Section& e2,
                                        const Section& e3, const Section& e4) const {
  Poly acc = m_->zero_poly();
  const Section* e[4] = {&e1, &e2, &e3, &e4};
  // antisymmetric expansion of each increasing-table entry over all 24 slots
  size_t perm[4] = {0, 1, 2, 3};
  for (const auto& ent : entries_) {
    size_t idx[4] = {ent.a, ent.b, ent.c, ent.d};
    std::vector<std::pair<std::array<size_t, 4>, int>> perms;
    std::array<size_t, 4> p = {0, 1, 2, 3};
    // enumerate permutations with signs
    auto sign_of = [](const std::array<size_t, 4>& q) {
      int s = 1;
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
          if (q[i] > q[j]) s = -s;
      return s;
    };
    do {
      Poly term = (*e[0]).comp[idx[p[0]]] * (*e[1]).comp[idx[p[1]]];
      if (!term.is_zero()) {
        term = term * (*e[2]).comp[idx[p[2]]];
        if (!term.is_zero()) term = term * (*e[3]).comp[idx[p[3]]];
      }
      if (!term.is_zero()) {
        term = term * ent.value;
        if (sign_of(p) < 0) term = -term;
        acc += term;
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  (void)perm;
  return acc;
}

Poly PontryaginTensor::basis_value(size_t a, size_t b, size_t c, size_t d) const {
  for (const auto& ent : entries_)
    if (ent.a == a && ent.b == b && ent.c == c && ent.d == d) return ent.value;
  return m_->zero_poly();
}

void PontryaginTensor::flip_sign(size_t a, size_t b, size_t c, size_t d) {
  for (auto& ent : entries_)
    if (ent.a == a && ent.b == b && ent.c == c && ent.d == d) {
      ent.value = -ent.value;
      return;
    }
  throw structural_error("PontryaginTensor::flip_sign: no such nonzero entry");
}

Poly dp_value(const Model& m,
              const std::function<Poly(const Section&, const Section&, const Section&,
                                       const Section&)>& p,
              const BracketFn& br, const std::vector<Section>& e, bool full_first_sum) {
  if (e.size() != 5) throw structural_error("dp_value: expects a 5-tuple");
  Poly acc = m.zero_poly();
  size_t top = full_first_sum ? 5 : 4;
  for (size_t i = 0; i < top; ++i) {
    std::vector<const Section*> rest;
    for (size_t k = 0; k < 5; ++k)
      if (k != i) rest.push_back(&e[k]);
    Poly pv = p(*rest[0], *rest[1], *rest[2], *rest[3]);
    Poly term = field_apply(anchor(m, e[i]), pv);
    if (i % 2 == 1) term = -term;  // (-1)^{i+1} with 1-based i
    acc += term;
  }
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = i + 1; j < 5; ++j) {
      std::vector<const Section*> rest;
      for (size_t k = 0; k < 5; ++k)
        if (k != i && k != j) rest.push_back(&e[k]);
      Section bij = br(e[i], e[j]);
      Poly term = p(bij, *rest[0], *rest[1], *rest[2]);
      if ((i + j) % 2 == 1) term = -term;  // (-1)^{i+j} with 1-based indices
      acc += term;
    }
  return acc;
}

PolyForm extract_h(const Model& m, const PontryaginTensor& p) {
  size_t n = m.chart_dim();
  PolyForm h(m.vars(), 4);
  if (n < 4) return h;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        for (size_t l = k + 1; l < n; ++l) {
          Poly v = p.eval_direct(m.transversal_section(i), m.transversal_section(j),
                                 m.transversal_section(k), m.transversal_section(l));
          if (!v.is_zero())
            h.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j),
                        static_cast<unsigned>(k), static_cast<unsigned>(l)},
                       std::move(v));
        }
  return h;
}

std::vector<Poly> quotient_coords(const Model& m, const Section& e) {
  return mat_apply(m.quotient_rows(), e.comp, m.vars());
}

std::optional<std::array<size_t, 3>> skew_kappa_violation(const Model& m) {
  size_t d = m.dim();
  std::vector<Section> basis;
  for (size_t a = 0; a < d; ++a) {
    RatVec v(d);
    v[a] = Rational(1);
    basis.push_back(m.constant_section(v));
  }
  // B(kappa(e1,e2),e3) is already antisymmetric in (e1,e2); total skewness is
  // equivalent to antisymmetry under swapping the last two slots.
  for (size_t a = 0; a < d; ++a)
    for (size_t b = a + 1; b < d; ++b)
      for (size_t c = 0; c < d; ++c) {
        Poly lhs = pairing(m, kappa_sections(m, basis[a], basis[b]), basis[c]);
        Poly rhs = pairing(m, kappa_sections(m, basis[a], basis[c]), basis[b]);
        if (lhs + rhs != m.zero_poly()) return std::array<size_t, 3>{a, b, c};
      }
  return std::nullopt;
}

PolyVec axiom1_residual(const Model& m, const BracketFn& br, const Section& e1,
                        const Section& e2) {
  PolyVec lhs = anchor(m, br(e1, e2));
  PolyVec rhs = field_bracket(anchor(m, e1), anchor(m, e2));
  for (size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs[i];
  return lhs;
}

Section axiom2_residual(const Model& m, const BracketFn& br, const Section& e) {
  return br(e, e) - d_op(m, pairing(m, e, e)).scaled(Rational(1, 2));
}

Poly axiom3_residual(const Model& m, const BracketFn& br, const Section& e1,
                     const Section& e2, const Section& e3) {
  Poly lhs = field_apply(anchor(m, e1), pairing(m, e2, e3));
  lhs -= pairing(m, br(e1, e2), e3);
  lhs -= pairing(m, e2, br(e1, e3));
  return lhs;
}

}  // namespace tractor
