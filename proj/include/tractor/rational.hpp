#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace tractor {

// Thrown on structural misuse (dimension mismatch, singular form, bad index).
class structural_error : public std::runtime_error {
public:
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational number. Always canonical: lowest terms, denominator > 0.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                     // NOLINT: implicit by design
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw structural_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "n" or "n/d" with optional sign.
  static Rational from_string(const std::string& text);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw structural_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Canonical text: "-3/2", "5", "0".
  std::string str() const;

private:
  mpq_class v_;
};

}  // namespace tractor
