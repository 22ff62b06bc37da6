#pragma once

#include <optional>
#include <vector>

#include "tractor/rational.hpp"

namespace tractor {

using RatVec = std::vector<Rational>;

// Dense matrix over Q. Elimination is exact; rank decisions are never
// numerical.
class Mat {
public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(size_t n);
  static Mat from_columns(const std::vector<RatVec>& cols);
  static Mat from_rows(const std::vector<RatVec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(size_t i) const;
  RatVec col(size_t j) const;

  Mat transposed() const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend RatVec operator*(const Mat& a, const RatVec& v);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  // Reduced row echelon form in place; returns pivot column indices.
  std::vector<size_t> rref();

  size_t rank() const;
  bool is_symmetric() const;

  // Basis of the right kernel {x : Ax = 0}.
  std::vector<RatVec> kernel_basis() const;

  // Some solution of Ax = b, or nullopt if inconsistent.
  std::optional<RatVec> solve(const RatVec& b) const;

  // Inverse of a square matrix, or nullopt if singular.
  std::optional<Mat> inverse() const;

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Span membership and comparison for column-vector subspaces.
bool in_span(const std::vector<RatVec>& basis, const RatVec& v);
bool subspace_leq(const std::vector<RatVec>& a, const std::vector<RatVec>& b);
bool subspace_eq(const std::vector<RatVec>& a, const std::vector<RatVec>& b);

// Extends an independent set to a basis of Q^n using standard basis vectors.
std::vector<RatVec> extend_to_basis(std::vector<RatVec> span, size_t n);

}  // namespace tractor
