#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "shapecone/rational.hpp"

namespace shapecone {

/// Finite sequence of exact rationals. Positions are 1-based in every
/// user-facing report; storage is the usual 0-based vector.
using ShapeVector = std::vector<Rational>;

ShapeVector parse_rationals(std::initializer_list<const char*> entries);

ShapeVector operator+(const ShapeVector& a, const ShapeVector& b);
ShapeVector operator-(const ShapeVector& a, const ShapeVector& b);
ShapeVector operator*(const Rational& s, const ShapeVector& v);
ShapeVector negate(const ShapeVector& v);
ShapeVector reversed(ShapeVector v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
ShapeVector constant_vector(std::size_t n, const Rational& value);
ShapeVector unit_vector(std::size_t n, std::size_t index);  // 0-based
bool is_zero(std::span<const Rational> v);

/// Dense row-major matrix of Rationals.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);
  explicit RMatrix(std::vector<ShapeVector> rows);
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  // 0-based access.
  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  ShapeVector row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  ShapeVector column_vector(std::size_t j) const;

  RMatrix transposed() const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RMatrix operator*(const RMatrix& a, const RMatrix& b);
RMatrix operator*(const Rational& s, const RMatrix& a);

/// Row vector times matrix: (v·A)_j = Σ_i v_i A(i,j).
ShapeVector left_multiply(std::span<const Rational> v, const RMatrix& a);

/// Exact inverse by Gauss-Jordan elimination. The pivot in each column is
/// the first nonzero entry at or below the diagonal.
/// Throws SingularMatrix, or DimensionMismatch for non-square input.
RMatrix invert(const RMatrix& a);

/// Returns λ with λ·A = v exactly (coordinates of v in the basis formed by
/// the rows of A). Throws SingularMatrix or DimensionMismatch.
ShapeVector solve_left(std::span<const Rational> v, const RMatrix& a);

}  // namespace shapecone
