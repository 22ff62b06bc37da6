#include "tractor/form.hpp"

#include <algorithm>

namespace tractor {
namespace {

// Sorts idx in place, returns the permutation sign, or 0 on repeats.
int sort_sign(PolyForm::Index& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    for (size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

Poly det(const std::vector<std::vector<const Poly*>>& m, std::vector<size_t>& cols,
         size_t row, const VarListPtr& vars) {
  if (row == m.size()) return Poly::constant(vars, Rational(1));
  Poly acc(vars);
  for (size_t c = 0; c < cols.size(); ++c) {
    size_t col = cols[c];
    cols.erase(cols.begin() + c);
    Poly sub = det(m, cols, row + 1, vars);
    Poly term = (*m[row][col]) * sub;
    if (c % 2 == 1) term = -term;
    acc += term;
    cols.insert(cols.begin() + c, col);
  }
  return acc;
}

}  // namespace

PolyForm PolyForm::scalar(const Poly& f) {
  PolyForm w(f.vars(), 0);
  w.add_term({}, f);
  return w;
}

PolyForm PolyForm::one_form(const VarListPtr& vars, const PolyVec& comps) {
  PolyForm w(vars, 1);
  for (unsigned i = 0; i < comps.size(); ++i) w.add_term({i}, comps[i]);
  return w;
}

Poly PolyForm::component(const Index& sorted_index) const {
  auto it = comps_.find(sorted_index);
  return it == comps_.end() ? Poly(vars_) : it->second;
}

void PolyForm::add_term(Index idx, Poly f) {
  if (idx.size() != degree_) throw structural_error("PolyForm: index arity != degree");
  for (unsigned i : idx)
    if (i >= dim()) throw structural_error("PolyForm: coordinate index out of range");
  if (f.is_zero()) return;
  int sign = sort_sign(idx);
  if (sign == 0) return;
  if (sign < 0) f = -f;
  auto [it, inserted] = comps_.emplace(std::move(idx), f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

PolyForm PolyForm::operator-() const {
  PolyForm r(vars_, degree_);
  for (const auto& [i, f] : comps_) r.comps_.emplace(i, -f);
  return r;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (degree_ != o.degree_) throw structural_error("PolyForm: degree mismatch");
  for (const auto& [i, f] : o.comps_) add_term(i, f);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (degree_ != o.degree_) throw structural_error("PolyForm: degree mismatch");
  for (const auto& [i, f] : o.comps_) add_term(i, -f);
  return *this;
}

PolyForm PolyForm::scaled(const Rational& c) const {
  PolyForm r(vars_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [i, f] : comps_) r.comps_.emplace(i, f.scaled(c));
  return r;
}

bool operator==(const PolyForm& a, const PolyForm& b) {
  return a.degree_ == b.degree_ && a.comps_ == b.comps_;
}

PolyForm PolyForm::d() const {
  PolyForm r(vars_, degree_ + 1);
  if (degree_ + 1 > dim()) return r;  // no (k+1)-forms on an n-dim chart
  for (const auto& [idx, f] : comps_) {
    for (unsigned i = 0; i < dim(); ++i) {
      Poly df = f.diff(i);
      if (df.is_zero()) continue;
      Index ext;
      ext.reserve(idx.size() + 1);
      ext.push_back(i);
      ext.insert(ext.end(), idx.begin(), idx.end());
      r.add_term(std::move(ext), std::move(df));
    }
  }
  return r;
}

Poly PolyForm::evaluate(const std::vector<PolyVec>& fields) const {
  if (fields.size() != degree_) throw structural_error("PolyForm::evaluate: arity mismatch");
  Poly acc(vars_);
  for (const auto& [idx, f] : comps_) {
    // minor matrix m[a][b] = fields[a][idx[b]]
    std::vector<std::vector<const Poly*>> m(degree_);
    for (unsigned a = 0; a < degree_; ++a) {
      m[a].resize(degree_);
      for (unsigned b = 0; b < degree_; ++b) m[a][b] = &fields[a][idx[b]];
    }
    std::vector<size_t> cols(degree_);
    for (size_t c = 0; c < degree_; ++c) cols[c] = c;
    acc += f * det(m, cols, 0, vars_);
  }
  return acc;
}

PolyForm PolyForm::homotopy() const {
  if (degree_ == 0) throw structural_error("PolyForm::homotopy: undefined for degree 0");
  PolyForm r(vars_, degree_ - 1);
  for (const auto& [idx, f] : comps_) {
    // radial average: monomial of total degree m picks up 1/(degree_ + m)
    Poly avg(vars_);
    for (const auto& [e, c] : f.terms()) {
      long m = 0;
      for (unsigned x : e) m += x;
      avg.add_term(e, c / Rational(static_cast<long>(degree_) + m));
    }
    for (size_t a = 0; a < idx.size(); ++a) {
      Index rest;
      for (size_t b = 0; b < idx.size(); ++b)
        if (b != a) rest.push_back(idx[b]);
      Poly term = avg * Poly::variable(vars_, idx[a]);
      if (a % 2 == 1) term = -term;
      r.add_term(std::move(rest), std::move(term));
    }
  }
  return r;
}

}  // namespace tractor
