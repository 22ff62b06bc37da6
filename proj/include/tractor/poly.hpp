#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tractor/rational.hpp"

namespace tractor {

// Ordered chart-coordinate vocabulary, shared by every Poly of one model.
using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

inline VarListPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarList>(std::move(names));
}

// Exponent multi-index, one entry per chart coordinate.
using Exponents = std::vector<unsigned>;

// Graded-lexicographic term order: total degree first, then lex.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Multivariate polynomial over Q in canonical form: no zero coefficients,
// terms ordered graded-lexicographically. Immutable value semantics; every
// operation returns a fresh canonical Poly.
class Poly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  Poly() = default;
  explicit Poly(VarListPtr vars) : vars_(std::move(vars)) {}

  static Poly constant(const VarListPtr& vars, const Rational& c);
  static Poly variable(const VarListPtr& vars, size_t index);
  static Poly monomial(const VarListPtr& vars, const Exponents& exp, const Rational& c);

  const VarListPtr& vars() const { return vars_; }
  size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Rational constant_term() const;
  unsigned total_degree() const;  // 0 for the zero polynomial

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  // Exact partial derivative with respect to coordinate i.
  Poly diff(size_t i) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical printer; output re-parses to an equal Poly.
  std::string str() const;

  // Internal: add c * x^exp, dropping the term if it cancels.
  void add_term(const Exponents& exp, const Rational& c);

private:
  static void require_compatible(const Poly& a, const Poly& b);

  VarListPtr vars_;
  TermMap terms_;
};

}  // namespace tractor
