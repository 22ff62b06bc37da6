#pragma once

#include <string>
#include <vector>

#include "tractor/poly.hpp"

namespace tractor {

// Syntax or name error, with the 0-based character offset it occurred at.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  size_t offset() const { return offset_; }

private:
  size_t offset_;
};

// Parses the polynomial grammar: rationals ("3", "1/2"), variable names,
// +, -, *, ^, parentheses. Round-trips with Poly::str().
Poly parse_poly(const std::string& text, const VarListPtr& vars);

// Parses a Lie-algebra-valued expression such as "u1 + x1*x3*v1": a polynomial
// in chart coordinates and basis names that is homogeneous of degree one in the
// basis names. Returns one chart-coordinate Poly per basis element.
std::vector<Poly> parse_gvector(const std::string& text, const VarListPtr& chart_vars,
                                const std::vector<std::string>& basis_names);

}  // namespace tractor
