#pragma once

// Test-only helpers. The arithmetic here is written out directly so that it
// stays independent of the library routines it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "shapecone/exactnum.hpp"
#include "shapecone/generators.hpp"

namespace shapecone::testing {

inline Rational q(long long p, long long d = 1) { return Rational(p, d); }

inline ShapeVector vec(std::initializer_list<Rational> xs) { return ShapeVector(xs); }

/// Naive Σ coeffs[k]·rows[k].
inline ShapeVector naive_combination(const std::vector<ShapeVector>& rows,
                                     const ShapeVector& coeffs) {
  ShapeVector out(rows.empty() ? 0 : rows.front().size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + coeffs[k] * rows[k][j];
  }
  return out;
}

/// Naive triple-loop product.
inline std::vector<ShapeVector> naive_product(const RMatrix& a, const RMatrix& b) {
  std::vector<ShapeVector> out(a.rows(), ShapeVector(b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s;
      for (std::size_t k = 0; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
      out[i][j] = s;
    }
  }
  return out;
}

inline bool is_identity(const std::vector<ShapeVector>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

/// Small random rational p/q with |p| ≤ span, 1 ≤ q ≤ den.
inline Rational random_rational(std::mt19937_64& rng, int span = 9, int den = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> d(1, den);
  return Rational(num(rng), d(rng));
}

inline ShapeVector random_vector(std::mt19937_64& rng, std::size_t n, int span = 9,
                                 int den = 6) {
  ShapeVector v(n);
  for (auto& x : v) x = random_rational(rng, span, den);
  return v;
}

/// Random nonnegative coefficients k/den, k in 0..span.
inline ShapeVector random_coefficients(std::mt19937_64& rng, std::size_t count,
                                       int span = 12, int den = 7) {
  std::uniform_int_distribution<int> num(0, span);
  std::uniform_int_distribution<int> d(1, den);
  ShapeVector v(count);
  for (auto& x : v) x = Rational(num(rng), d(rng));
  return v;
}

}  // namespace shapecone::testing
