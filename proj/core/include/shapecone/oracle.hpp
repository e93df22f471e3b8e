#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "shapecone/exactnum.hpp"
#include "shapecone/generators.hpp"

namespace shapecone {

enum class Feasibility { feasible, infeasible };

/// Outcome of "is v a conic combination of these generators?".
/// Feasible: v = Σ coefficients[k]·g_k with every coefficient ≥ 0.
/// Infeasible: `separating` is a y with y·g_k ≥ 0 for all k and y·v < 0.
struct FeasibilityResult {
  Feasibility verdict;
  ShapeVector coefficients;
  ShapeVector separating;

  bool feasible() const { return verdict == Feasibility::feasible; }
};

/// Exact phase-one simplex on {μ ≥ 0 : Σ μ_k g_k = v} with Bland's
/// least-index rule, so it always terminates. Both kinds of witness are
/// re-checked exactly before returning. Throws DimensionMismatch.
FeasibilityResult conic_feasibility(std::span<const Rational> v,
                                    std::span<const ShapeVector> generators);

inline FeasibilityResult conic_feasibility(std::span<const Rational> v,
                                           const GeneratorSet& gens) {
  return conic_feasibility(v, gens.rows);
}

struct RayVerdict {
  std::string label;
  bool extreme;
  /// Feasibility of this generator against all the others.
  FeasibilityResult check;
};

struct ExtremeRayReport {
  ConeKind kind;
  std::size_t n;
  std::vector<RayVerdict> rays;

  std::size_t extreme_count() const;
  bool all_extreme() const { return extreme_count() == rays.size(); }
};

inline constexpr std::size_t kDefaultExtremeRayLimit = 8;

/// Checks every generator of `kind` against the conic hull of the others;
/// a generator is extreme when that is infeasible. Generators are checked
/// concurrently; the report is in generator order.
/// Throws ScaleLimitExceeded when n > max_n.
ExtremeRayReport verify_extreme_rays(ConeKind kind, std::size_t n,
                                     std::size_t max_n = kDefaultExtremeRayLimit);

/// Deterministic stream of sampling coefficients. Each coefficient is k/64
/// where k is the next std::mt19937_64 output (seeded with `seed`) taken
/// mod 65, so k is in 0..64.
class CoefficientStream {
 public:
  explicit CoefficientStream(std::uint64_t seed) : engine_(seed) {}

  Rational next();
  ShapeVector next(std::size_t count);

 private:
  std::mt19937_64 engine_;
};

/// The conic combination of generators(kind, n) with coefficients drawn
/// from CoefficientStream(seed). Same seed, same vector.
ShapeVector sample_in_cone(ConeKind kind, std::size_t n, std::uint64_t seed);

/// Membership decided only by the shape predicates that define `kind`.
bool brute_force_membership(std::span<const Rational> v, ConeKind kind);

}  // namespace shapecone
