#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shapecone/exactnum.hpp"
#include "shapecone/shapes.hpp"

namespace shapecone {

/// The shape cones handled by the library. "positive" means entrywise ≥ 0.
enum class ConeKind {
  positive,
  positive_increasing,
  positive_decreasing,
  positive_concave,
  positive_convex,
  increasing_convex,
  decreasing_convex,
  increasing_concave,
  decreasing_concave,
};

inline constexpr std::array<ConeKind, 9> kAllConeKinds = {
    ConeKind::positive,           ConeKind::positive_increasing,
    ConeKind::positive_decreasing, ConeKind::positive_concave,
    ConeKind::positive_convex,    ConeKind::increasing_convex,
    ConeKind::decreasing_convex,  ConeKind::increasing_concave,
    ConeKind::decreasing_concave,
};

/// Every kind except positive_convex is spanned by n independent vectors.
inline constexpr std::array<ConeKind, 8> kSimplicialConeKinds = {
    ConeKind::positive,           ConeKind::positive_increasing,
    ConeKind::positive_decreasing, ConeKind::positive_concave,
    ConeKind::increasing_convex,  ConeKind::decreasing_convex,
    ConeKind::increasing_concave, ConeKind::decreasing_concave,
};

std::string_view to_string(ConeKind kind);
std::optional<ConeKind> parse_cone_kind(std::string_view name);

constexpr bool simplicial(ConeKind kind) {
  return kind != ConeKind::positive_convex;
}

/// The shape predicates whose conjunction defines `kind`, in the order
/// membership certificates report the first violation.
std::vector<Shape> defining_shapes(ConeKind kind);

// Standard vectors. All indices are 1-based, as in c⁽ⁱ⁾, a⁽ⁱ⁾, b⁽ⁱ⁾.

/// c⁽ⁱ⁾: the smallest positive concave vector with maximum 1 attained at i.
/// Rises linearly from 0 at position 1 to 1 at i, then falls linearly to 0
/// at position n.
ShapeVector standard_concave(std::size_t n, std::size_t i);

/// a⁽ⁱ⁾, 1 ≤ i < n: zero up to position i, then (j−i)/(n−i).
ShapeVector standard_increasing_convex(std::size_t n, std::size_t i);

/// b⁽ⁱ⁾ = reverse of a⁽ⁱ⁾.
ShapeVector standard_decreasing_convex(std::size_t n, std::size_t i);

/// Zero before position i, one from i on.
ShapeVector step_vector(std::size_t n, std::size_t i);

/// h⁽ⁱ⁾: h⁽¹⁾ = 𝟏; for i ≥ 2, min(j−1, i−1)/(i−1). A ramp from 0 at
/// position 1 to 1 at position i, then flat.
ShapeVector standard_increasing_concave(std::size_t n, std::size_t i);

/// d⁽ⁱ⁾ = reverse of h⁽ⁿ⁻ⁱ⁺¹⁾: flat at 1 up to position i, then a ramp down
/// to 0 at position n; d⁽ⁿ⁾ = 𝟏.
ShapeVector standard_decreasing_concave(std::size_t n, std::size_t i);

struct GeneratorSet {
  ConeKind kind;
  std::size_t n = 0;
  std::vector<ShapeVector> rows;
  std::vector<std::string> labels;

  std::size_t size() const { return rows.size(); }
  RMatrix matrix() const { return RMatrix(rows); }
  /// Σ coefficients[k] · rows[k].
  ShapeVector combine(std::span<const Rational> coefficients) const;
};

/// Generators of `kind` in a fixed order:
///   positive            e(1)..e(n)
///   positive_increasing s(1)..s(n)        (step vectors, s(1) = 𝟏)
///   positive_decreasing r(1)..r(n)        (r(i) = one on positions 1..i)
///   positive_concave    c(1)..c(n)
///   positive_convex     a(1)..a(n−1), b(1)..b(n−1)
///   increasing_convex   1, a(1)..a(n−1)
///   decreasing_convex   1, b(1)..b(n−1)
///   increasing_concave  h(1)..h(n)        (h(1) = 𝟏)
///   decreasing_concave  d(1)..d(n)        (d(n) = 𝟏)
/// For n = 1 every kind is the half-line spanned by (1), labelled "1".
/// The two "decreasing" simplicial families are ordered as the central
/// reflection of their increasing counterparts, so their generator matrices
/// are J·Z·J and J·H·J (J the reversal permutation).
GeneratorSet generators(ConeKind kind, std::size_t n);

}  // namespace shapecone
