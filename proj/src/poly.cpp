#include "tractor/poly.hpp"

#include <sstream>

namespace tractor {

void Poly::require_compatible(const Poly& a, const Poly& b) {
  if (a.vars_ == b.vars_) return;
  if (a.vars_ && b.vars_ && *a.vars_ == *b.vars_) return;
  throw structural_error("Poly: variable-list mismatch");
}

Poly Poly::constant(const VarListPtr& vars, const Rational& c) {
  Poly p(vars);
  p.add_term(Exponents(vars->size(), 0), c);
  return p;
}

Poly Poly::variable(const VarListPtr& vars, size_t index) {
  if (index >= vars->size()) throw structural_error("Poly: variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = 1;
  Poly p(vars);
  p.add_term(e, Rational(1));
  return p;
}

Poly Poly::monomial(const VarListPtr& vars, const Exponents& exp, const Rational& c) {
  if (exp.size() != vars->size()) throw structural_error("Poly: exponent arity mismatch");
  Poly p(vars);
  p.add_term(exp, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (unsigned e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rational Poly::constant_term() const {
  Exponents zero(nvars(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const {
  if (terms_.empty()) return 0;
  // grlex order: last term has maximal total degree
  unsigned d = 0;
  for (unsigned e : terms_.rbegin()->first) d += e;
  return d;
}

void Poly::add_term(const Exponents& exp, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly::require_compatible(a, b);
  Poly r(a.vars_ ? a.vars_ : b.vars_);
  Exponents e(r.nvars(), 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

Poly Poly::diff(size_t i) const {
  if (i >= nvars()) throw structural_error("Poly::diff: coordinate index out of range");
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    r.add_term(d, c * Rational(static_cast<long>(e[i])));
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  Poly::require_compatible(a, b);
  return a.terms_ == b.terms_;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // print leading (highest grlex) term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_vars = false;
    for (unsigned x : e)
      if (x != 0) has_vars = true;
    if (!has_vars) {
      out << mag.str();
      continue;
    }
    bool coeff_printed = false;
    if (!mag.is_one()) {
      out << mag.str();
      coeff_printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (coeff_printed) out << "*";
      out << (*vars_)[i];
      if (e[i] > 1) out << "^" << e[i];
      coeff_printed = true;
    }
  }
  return out.str();
}

}  // namespace tractor
