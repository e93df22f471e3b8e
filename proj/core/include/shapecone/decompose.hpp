#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shapecone/exactnum.hpp"
#include "shapecone/generators.hpp"
#include "shapecone/shapes.hpp"

namespace shapecone {

/// Coordinates of a vector over generators(kind, n), in that order.
struct Decomposition {
  ConeKind kind;
  std::size_t n = 0;
  ShapeVector coefficients;

  /// True when every coefficient is ≥ 0, i.e. this is a conic combination.
  bool is_conic() const;
  ShapeVector reconstruct() const;
  std::vector<std::string> labels() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// c = baseline·𝟏 + Σ lambda[i]·a⁽ⁱ⁺¹⁾ + Σ theta[i]·b⁽ⁱ⁺¹⁾ with
/// baseline = min c. Both coefficient lists have n − 1 entries.
struct ConvexCanonicalForm {
  Rational baseline;
  ShapeVector lambda;
  ShapeVector theta;

  ShapeVector reconstruct(std::size_t n) const;
  /// The same vector written over generators(positive_convex, n); the
  /// baseline is folded in through 𝟏 = a⁽¹⁾ + b⁽¹⁾.
  Decomposition as_decomposition(std::size_t n) const;

  friend bool operator==(const ConvexCanonicalForm&,
                         const ConvexCanonicalForm&) = default;
};

/// One subtraction performed by a greedy decomposition. `index` is the
/// 1-based generator index (the i of c⁽ⁱ⁾ or a⁽ⁱ⁾), or 0 for 𝟏.
struct GreedyStep {
  std::size_t index;
  Rational lambda;
  ShapeVector before;
  ShapeVector after;
};

struct GreedyOptions {
  /// Chooses which singular index to remove next from the ascending list of
  /// current singular indices (1-based). Default: the first one.
  std::function<std::size_t(std::span<const std::size_t>)> pick;
  /// Called after every subtraction.
  std::function<void(const GreedyStep&)> observer;
};

/// Positive concave c as a conic combination of c⁽¹⁾..c⁽ⁿ⁾. First removes
/// c₁·c⁽¹⁾ and cₙ·c⁽ⁿ⁾, then repeatedly takes a singular interior index i
/// (2cᵢ > cᵢ₋₁ + cᵢ₊₁) and subtracts λᵢc⁽ⁱ⁾ with
/// λᵢ = (2cᵢ − cᵢ₋₁ − cᵢ₊₁)(i−1)(n−i)/(n−1), which makes i non-singular and
/// leaves every other index's status alone. Throws NotInCone.
Decomposition decompose_concave_greedy(std::span<const Rational> c,
                                       const GreedyOptions& options = {});

/// Positive increasing convex c over {𝟏, a⁽¹⁾..a⁽ⁿ⁻¹⁾}. The 𝟏 coefficient is
/// c₁; each interior kink sᵢ = cᵢ₊₁ − 2cᵢ + cᵢ₋₁ > 0 is removed with
/// λᵢ = sᵢ(n−i); the kink-free remainder is a multiple of a⁽¹⁾.
/// Throws NotInCone.
Decomposition decompose_increasing_convex_greedy(
    std::span<const Rational> c, const GreedyOptions& options = {});

/// Mirror image of the increasing case over {𝟏, b⁽¹⁾..b⁽ⁿ⁻¹⁾}. Observed
/// steps are reported in the original (unreversed) coordinates.
Decomposition decompose_decreasing_convex_greedy(
    std::span<const Rational> c, const GreedyOptions& options = {});

/// Exact coordinates λ with λ·G = c for the generator matrix G of a
/// simplicial kind. Coefficients may be negative; `is_conic()` then fails
/// and c lies outside the cone.
Decomposition decompose_via_matrix(std::span<const Rational> c, ConeKind kind);

/// Canonical form of a positive convex vector: subtract min c, split the
/// remainder around the (contiguous) set where it vanishes into a
/// decreasing and an increasing part, and decompose both greedily.
/// Throws NotInCone.
ConvexCanonicalForm decompose_convex_canonical(
    std::span<const Rational> c, const GreedyOptions& options = {});

/// Second route to the canonical form: with baseline = min c, only the
/// a⁽ⁱ⁾ and b⁽ⁱ⁾ vanishing on the minimum set may appear, and their
/// coefficients solve a square linear system over the remaining positions.
/// Throws NotInCone.
ConvexCanonicalForm convex_canonical_by_linear_solve(std::span<const Rational> c);

/// A defining inequality of a cone that a vector violates.
struct Violation {
  Shape shape;
  std::size_t index;  // 1-based, as in PredicateResult::witness
  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class Verdict { in_cone, out_of_cone };

struct MembershipCertificate {
  Verdict verdict;
  /// Present when in_cone.
  std::optional<Decomposition> decomposition;
  /// Present when in_cone for positive_convex.
  std::optional<ConvexCanonicalForm> canonical;
  /// Present when out_of_cone: the first failing defining inequality.
  std::optional<Violation> violation;
};

/// Decides membership with a witness either way. Simplicial kinds go
/// through decompose_via_matrix; positive_convex through its predicates and
/// the canonical form. Throws StructuralViolation if the coordinate verdict
/// and the defining inequalities disagree.
MembershipCertificate membership(std::span<const Rational> c, ConeKind kind);

}  // namespace shapecone
