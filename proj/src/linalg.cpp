#include "tractor/linalg.hpp"

namespace tractor {

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Mat Mat::from_columns(const std::vector<RatVec>& cols) {
  if (cols.empty()) return Mat(0, 0);
  Mat m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw structural_error("Mat: ragged columns");
    for (size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw structural_error("Mat: ragged rows");
    for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec Mat::row(size_t i) const {
  RatVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RatVec Mat::col(size_t j) const {
  RatVec c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw structural_error("Mat: product shape mismatch");
  Mat r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

RatVec operator*(const Mat& a, const RatVec& v) {
  if (a.cols_ != v.size()) throw structural_error("Mat: vector shape mismatch");
  RatVec r(a.rows_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t j = 0; j < a.cols_; ++j) r[i] += a.at(i, j) * v[j];
  return r;
}

std::vector<size_t> Mat::rref() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t p = r;
    while (p < rows_ && at(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    Rational inv = Rational(1) / at(r, c);
    for (size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      Rational f = at(i, c);
      for (size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t Mat::rank() const {
  Mat tmp = *this;
  return tmp.rref().size();
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::vector<RatVec> Mat::kernel_basis() const {
  Mat tmp = *this;
  std::vector<size_t> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols_);
    v[free] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -tmp.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> Mat::solve(const RatVec& b) const {
  if (b.size() != rows_) throw structural_error("Mat::solve: shape mismatch");
  Mat aug(rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  RatVec x(cols_);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw structural_error("Mat::inverse: not square");
  Mat aug(rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Rational(1);
  }
  std::vector<size_t> pivots = aug.rref();
  if (pivots.size() != rows_) return std::nullopt;
  for (size_t r = 0; r < rows_; ++r)
    if (pivots[r] != r) return std::nullopt;
  Mat inv(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  bool zero = true;
  for (const auto& x : v)
    if (!x.is_zero()) zero = false;
  if (zero) return true;
  if (basis.empty()) return false;
  Mat a = Mat::from_columns(basis);
  size_t r0 = a.rank();
  std::vector<RatVec> ext = basis;
  ext.push_back(v);
  return Mat::from_columns(ext).rank() == r0;
}

bool subspace_leq(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  for (const auto& v : a)
    if (!in_span(b, v)) return false;
  return true;
}

bool subspace_eq(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  return subspace_leq(a, b) && subspace_leq(b, a);
}

std::vector<RatVec> extend_to_basis(std::vector<RatVec> span, size_t n) {
  for (size_t i = 0; i < n && span.size() < n; ++i) {
    RatVec e(n);
    e[i] = Rational(1);
    if (!in_span(span, e)) span.push_back(std::move(e));
  }
  if (span.size() != n) throw structural_error("extend_to_basis: span was dependent");
  return span;
}

}  // namespace tractor
