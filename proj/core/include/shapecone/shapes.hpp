#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "shapecone/exactnum.hpp"

namespace shapecone {

enum class Shape {
  positive,
  increasing,
  decreasing,
  convex,
  concave,
  unimodal,
  log_concave,
};

inline constexpr std::array<Shape, 7> kAllShapes = {
    Shape::positive, Shape::increasing, Shape::decreasing,  Shape::convex,
    Shape::concave,  Shape::unimodal,   Shape::log_concave,
};

std::string_view to_string(Shape s);
std::optional<Shape> parse_shape(std::string_view name);

/// v_{i+1} − v_i for i = 1..n−1.
ShapeVector forward_differences(std::span<const Rational> v);

/// v_{i+2} − 2v_{i+1} + v_i; empty for n ≤ 2.
ShapeVector second_differences(std::span<const Rational> v);

/// Outcome of one defining check. When the check fails, `witness` is the
/// smallest 1-based index i at which the defining inequality fails, using
/// the same index as the inequality itself: i for v_i ≥ 0, i for
/// v_{i+1} − v_i ≥ 0, and the middle index i for the second-order and
/// log-concavity conditions. For unimodality it is the first index i after
/// the increasing prefix with v_{i+1} > v_i.
struct PredicateResult {
  bool holds = true;
  std::optional<std::size_t> witness;

  explicit operator bool() const { return holds; }
  friend bool operator==(const PredicateResult&,
                         const PredicateResult&) = default;
};

/// Checks one shape. Every inequality is relaxed to "≥ −eps"; eps = 0 is
/// the exact definition. Log-concavity is decided multiplicatively,
/// v_i² ≥ v_{i−1}·v_{i+1}, and requires every entry to be > 0.
/// Throws NonPositiveEntry for log_concave on a vector with an entry ≤ 0.
PredicateResult check_shape(std::span<const Rational> v, Shape shape,
                            const Rational& eps = Rational());

inline bool predicate(std::span<const Rational> v, Shape shape,
                      const Rational& eps = Rational()) {
  return check_shape(v, shape, eps).holds;
}

struct ShapeReport {
  PredicateResult positive;
  PredicateResult increasing;
  PredicateResult decreasing;
  PredicateResult convex;
  PredicateResult concave;
  PredicateResult unimodal;
  /// nullopt when some entry is ≤ 0 (not applicable).
  std::optional<PredicateResult> log_concave;

  const PredicateResult* get(Shape s) const;
};

ShapeReport classify(std::span<const Rational> v,
                     const Rational& eps = Rational());

}  // namespace shapecone
