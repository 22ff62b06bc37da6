#include "tractor/rational.hpp"

namespace tractor {

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw structural_error("Rational: empty literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw structural_error("Rational: bad literal '" + text + "'");
  }
  try {
    mpq_class v(text);
    if (v.get_den() == 0) throw structural_error("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw structural_error("Rational: bad literal '" + text + "'");
  }
}

std::string Rational::str() const {
  return v_.get_str();
}

}  // namespace tractor
