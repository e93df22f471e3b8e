#include "shapecone/exactnum.hpp"

#include <algorithm>
#include <utility>

namespace shapecone {

ShapeVector parse_rationals(std::initializer_list<const char*> entries) {
  ShapeVector out;
  out.reserve(entries.size());
  for (const char* e : entries) out.push_back(Rational::parse(e));
  return out;
}

ShapeVector operator+(const ShapeVector& a, const ShapeVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  ShapeVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

ShapeVector operator-(const ShapeVector& a, const ShapeVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  ShapeVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

ShapeVector operator*(const Rational& s, const ShapeVector& v) {
  ShapeVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

ShapeVector negate(const ShapeVector& v) { return Rational(-1) * v; }

ShapeVector reversed(ShapeVector v) {
  std::reverse(v.begin(), v.end());
  return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ShapeVector constant_vector(std::size_t n, const Rational& value) {
  return ShapeVector(n, value);
}

ShapeVector unit_vector(std::size_t n, std::size_t index) {
  ShapeVector v(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

RMatrix::RMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RMatrix::RMatrix(std::vector<ShapeVector> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch(cols_, r.size());
    std::move(r.begin(), r.end(), std::back_inserter(data_));
  }
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch(cols_, r.size());
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ShapeVector RMatrix::column_vector(std::size_t j) const {
  ShapeVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RMatrix RMatrix::transposed() const {
  RMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch(a.cols(), b.rows());
  RMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

RMatrix operator*(const Rational& s, const RMatrix& a) {
  RMatrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  }
  return out;
}

ShapeVector left_multiply(std::span<const Rational> v, const RMatrix& a) {
  if (v.size() != a.rows()) throw DimensionMismatch(a.rows(), v.size());
  ShapeVector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) out[j] += v[i] * a(i, j);
    }
  }
  return out;
}

namespace {

// Reduces [lhs | rhs] so that lhs becomes the identity; rhs then holds
// lhs⁻¹·rhs. Pivot: first nonzero entry at or below the diagonal.
void gauss_jordan(RMatrix& lhs, RMatrix& rhs) {
  const std::size_t n = lhs.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && lhs(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      throw SingularMatrix("matrix is singular (no pivot in column " +
                           std::to_string(col + 1) + ")");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lhs(pivot, j), lhs(col, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        std::swap(rhs(pivot, j), rhs(col, j));
      }
    }
    const Rational inv = Rational(1) / lhs(col, col);
    for (std::size_t j = col; j < n; ++j) lhs(col, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || lhs(r, col).is_zero()) continue;
      const Rational f = lhs(r, col);
      for (std::size_t j = col; j < n; ++j) {
        if (!lhs(col, j).is_zero()) lhs(r, j) -= f * lhs(col, j);
      }
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        if (!rhs(col, j).is_zero()) rhs(r, j) -= f * rhs(col, j);
      }
    }
  }
}

}  // namespace

RMatrix invert(const RMatrix& a) {
  if (!a.square()) throw DimensionMismatch(a.rows(), a.cols());
  RMatrix lhs(a);
  RMatrix rhs = RMatrix::identity(a.rows());
  gauss_jordan(lhs, rhs);
  return rhs;
}

ShapeVector solve_left(std::span<const Rational> v, const RMatrix& a) {
  if (!a.square()) throw DimensionMismatch(a.rows(), a.cols());
  if (v.size() != a.rows()) throw DimensionMismatch(a.rows(), v.size());
  // λ·A = v  ⇔  Aᵀ·λᵀ = vᵀ
  RMatrix lhs = a.transposed();
  RMatrix rhs(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
  gauss_jordan(lhs, rhs);
  return rhs.column_vector(0);
}

}  // namespace shapecone
