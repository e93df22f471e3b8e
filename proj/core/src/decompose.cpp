#include "shapecone/decompose.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "shapecone/matrices.hpp"

namespace shapecone {

namespace {

Rational ratio(std::size_t p, std::size_t q) {
  return Rational(static_cast<long long>(p), static_cast<long long>(q));
}

// Throws NotInCone naming the first failing defining inequality of `kind`.
void require_in(std::span<const Rational> c, ConeKind kind,
                std::span<const Shape> shapes) {
  if (c.empty()) throw NotInCone("empty vector");
  for (Shape s : shapes) {
    const PredicateResult r = check_shape(c, s);
    if (!r.holds) {
      throw NotInCone("vector is not in " + std::string(to_string(kind)) +
                      ": " + std::string(to_string(s)) + " fails at index " +
                      std::to_string(*r.witness));
    }
  }
}

std::size_t pick_index(const GreedyOptions& options,
                       const std::vector<std::size_t>& singular) {
  if (!options.pick) return singular.front();
  const std::size_t i = options.pick(singular);
  if (std::find(singular.begin(), singular.end(), i) == singular.end()) {
    throw Error("greedy pick returned a non-singular index");
  }
  return i;
}

// Positions i (1-based, 1 < i < n) where the second difference
// v_{i+1} − 2v_i + v_{i−1} has the requested strict sign.
std::vector<std::size_t> kinks(const ShapeVector& v, int sign) {
  std::vector<std::size_t> out;
  const ShapeVector d = second_differences(v);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k].sign() == sign) out.push_back(k + 2);
  }
  return out;
}

void subtract(ShapeVector& r, const Rational& lambda, const ShapeVector& g,
              std::size_t index, const GreedyOptions& options) {
  ShapeVector before;
  if (options.observer) before = r;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!g[j].is_zero()) r[j] -= lambda * g[j];
  }
  if (options.observer) options.observer({index, lambda, std::move(before), r});
}

void require_zero_remainder(const ShapeVector& r, std::string_view what) {
  if (!is_zero(r)) {
    throw StructuralViolation(std::string(what) +
                              ": greedy decomposition left a nonzero remainder");
  }
}

struct InverseCache {
  std::mutex mutex;
  std::map<std::pair<ConeKind, std::size_t>, std::shared_ptr<const RMatrix>> entries;
};

std::shared_ptr<const RMatrix> generator_inverse(ConeKind kind, std::size_t n) {
  static InverseCache cache;
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find({kind, n}); it != cache.entries.end()) {
      return it->second;
    }
  }
  auto inv = std::make_shared<const RMatrix>(invert(generator_matrix(kind, n)));
  std::lock_guard lock(cache.mutex);
  return cache.entries.try_emplace({kind, n}, std::move(inv)).first->second;
}

}  // namespace

bool Decomposition::is_conic() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& x) { return x.sign() >= 0; });
}

ShapeVector Decomposition::reconstruct() const {
  return generators(kind, n).combine(coefficients);
}

std::vector<std::string> Decomposition::labels() const {
  return generators(kind, n).labels;
}

ShapeVector ConvexCanonicalForm::reconstruct(std::size_t n) const {
  ShapeVector out = constant_vector(n, baseline);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (!lambda[i].is_zero()) {
      out = out + lambda[i] * standard_increasing_convex(n, i + 1);
    }
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!theta[i].is_zero()) {
      out = out + theta[i] * standard_decreasing_convex(n, i + 1);
    }
  }
  return out;
}

Decomposition ConvexCanonicalForm::as_decomposition(std::size_t n) const {
  Decomposition d{ConeKind::positive_convex, n, {}};
  if (n == 1) {
    d.coefficients = {baseline};
    return d;
  }
  d.coefficients = lambda;
  d.coefficients.insert(d.coefficients.end(), theta.begin(), theta.end());
  d.coefficients[0] += baseline;
  d.coefficients[n - 1] += baseline;
  return d;
}

Decomposition decompose_concave_greedy(std::span<const Rational> c,
                                       const GreedyOptions& options) {
  const auto shapes = defining_shapes(ConeKind::positive_concave);
  require_in(c, ConeKind::positive_concave, shapes);
  const std::size_t n = c.size();
  Decomposition d{ConeKind::positive_concave, n, ShapeVector(n)};
  ShapeVector r(c.begin(), c.end());
  if (n == 1) {
    d.coefficients[0] = r[0];
    return d;
  }

  d.coefficients[0] = c.front();
  subtract(r, c.front(), standard_concave(n, 1), 1, options);
  d.coefficients[n - 1] = c.back();
  subtract(r, c.back(), standard_concave(n, n), n, options);

  // Singular: 2r_i > r_{i−1} + r_{i+1}, i.e. a negative second difference.
  for (std::size_t round = 0; round < n; ++round) {
    const auto singular = kinks(r, -1);
    if (singular.empty()) break;
    const std::size_t i = pick_index(options, singular);
    const Rational excess = Rational(2) * r[i - 1] - r[i - 2] - r[i];
    const Rational lambda = excess * ratio((i - 1) * (n - i), n - 1);
    d.coefficients[i - 1] += lambda;
    subtract(r, lambda, standard_concave(n, i), i, options);
  }
  require_zero_remainder(r, "positive_concave");
  return d;
}

Decomposition decompose_increasing_convex_greedy(std::span<const Rational> c,
                                                 const GreedyOptions& options) {
  const auto shapes = defining_shapes(ConeKind::increasing_convex);
  require_in(c, ConeKind::increasing_convex, shapes);
  const std::size_t n = c.size();
  Decomposition d{ConeKind::increasing_convex, n, ShapeVector(n)};
  ShapeVector r(c.begin(), c.end());

  // Coefficient 0 belongs to 𝟏, coefficient i to a⁽ⁱ⁾.
  d.coefficients[0] = c.front();
  subtract(r, c.front(), constant_vector(n, 1), 0, options);
  if (n == 1) return d;

  for (std::size_t round = 0; round < n; ++round) {
    const auto singular = kinks(r, +1);
    if (singular.empty()) break;
    const std::size_t i = pick_index(options, singular);
    const Rational kink = r[i] - Rational(2) * r[i - 1] + r[i - 2];
    const Rational lambda = kink * ratio(n - i, 1);
    d.coefficients[i] += lambda;
    subtract(r, lambda, standard_increasing_convex(n, i), i, options);
  }
  // What is left is linear with r₁ = 0, hence r_n · a⁽¹⁾.
  const Rational ramp = r.back();
  d.coefficients[1] += ramp;
  subtract(r, ramp, standard_increasing_convex(n, 1), 1, options);
  require_zero_remainder(r, "increasing_convex");
  return d;
}

Decomposition decompose_decreasing_convex_greedy(std::span<const Rational> c,
                                                 const GreedyOptions& options) {
  const auto shapes = defining_shapes(ConeKind::decreasing_convex);
  require_in(c, ConeKind::decreasing_convex, shapes);
  GreedyOptions mirrored;
  mirrored.pick = options.pick;
  if (options.observer) {
    mirrored.observer = [&options](const GreedyStep& s) {
      options.observer({s.index, s.lambda, reversed(s.before), reversed(s.after)});
    };
  }
  const ShapeVector flipped = reversed(ShapeVector(c.begin(), c.end()));
  Decomposition d = decompose_increasing_convex_greedy(flipped, mirrored);
  d.kind = ConeKind::decreasing_convex;
  return d;
}

Decomposition decompose_via_matrix(std::span<const Rational> c, ConeKind kind) {
  if (!simplicial(kind)) {
    throw Error(std::string(to_string(kind)) + " is not a simplicial cone");
  }
  if (c.empty()) throw DimensionMismatch(1, 0);
  const std::size_t n = c.size();
  const auto inverse = generator_inverse(kind, n);
  return {kind, n, left_multiply(c, *inverse)};
}

ConvexCanonicalForm decompose_convex_canonical(std::span<const Rational> c,
                                               const GreedyOptions& options) {
  const auto shapes = defining_shapes(ConeKind::positive_convex);
  require_in(c, ConeKind::positive_convex, shapes);
  const std::size_t n = c.size();
  ConvexCanonicalForm form;
  form.baseline = *std::min_element(c.begin(), c.end());
  if (n == 1) return form;

  ShapeVector r(c.begin(), c.end());
  for (auto& x : r) x -= form.baseline;
  const auto first = std::find_if(r.begin(), r.end(),
                                  [](const Rational& x) { return x.is_zero(); });
  const auto last = std::find_if(r.rbegin(), r.rend(),
                                 [](const Rational& x) { return x.is_zero(); });
  const std::size_t p = static_cast<std::size_t>(first - r.begin());
  const std::size_t q = n - 1 - static_cast<std::size_t>(last - r.rbegin());
  for (std::size_t j = p; j <= q; ++j) {
    if (!r[j].is_zero()) {
      throw StructuralViolation("minimum set of a convex vector is not contiguous");
    }
  }

  ShapeVector falling(n), rising(n);
  for (std::size_t j = 0; j < p; ++j) falling[j] = r[j];
  for (std::size_t j = q + 1; j < n; ++j) rising[j] = r[j];

  const Decomposition up = decompose_increasing_convex_greedy(rising, options);
  const Decomposition down = decompose_decreasing_convex_greedy(falling, options);
  if (!up.coefficients[0].is_zero() || !down.coefficients[0].is_zero()) {
    throw StructuralViolation("canonical split left a constant component");
  }
  form.lambda.assign(up.coefficients.begin() + 1, up.coefficients.end());
  form.theta.assign(down.coefficients.begin() + 1, down.coefficients.end());
  return form;
}

ConvexCanonicalForm convex_canonical_by_linear_solve(std::span<const Rational> c) {
  const auto shapes = defining_shapes(ConeKind::positive_convex);
  require_in(c, ConeKind::positive_convex, shapes);
  const std::size_t n = c.size();
  ConvexCanonicalForm form;
  form.baseline = *std::min_element(c.begin(), c.end());
  if (n == 1) return form;
  form.lambda.assign(n - 1, Rational());
  form.theta.assign(n - 1, Rational());

  // 1-based minimum set [p, q].
  std::size_t p = 0, q = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (c[j - 1] == form.baseline) {
      if (p == 0) p = j;
      q = j;
    }
  }
  // a⁽ⁱ⁾ vanishes on 1..i, so it may appear only for i ≥ q; b⁽ⁱ⁾ vanishes on
  // n−i+1..n, so only for i ≥ n−p+1.
  std::vector<ShapeVector> basis;
  std::vector<std::pair<bool, std::size_t>> slots;  // (is_lambda, i)
  for (std::size_t i = std::max<std::size_t>(q, 1); i <= n - 1; ++i) {
    basis.push_back(standard_increasing_convex(n, i));
    slots.emplace_back(true, i);
  }
  for (std::size_t i = n - p + 1; i <= n - 1; ++i) {
    basis.push_back(standard_decreasing_convex(n, i));
    slots.emplace_back(false, i);
  }
  std::vector<std::size_t> positions;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j < p || j > q) positions.push_back(j);
  }
  if (positions.size() != basis.size()) {
    throw StructuralViolation("support system is not square");
  }
  if (basis.empty()) return form;

  const std::size_t m = basis.size();
  RMatrix system(m, m);
  ShapeVector rhs(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t t = 0; t < m; ++t) system(k, t) = basis[k][positions[t] - 1];
  }
  for (std::size_t t = 0; t < m; ++t) rhs[t] = c[positions[t] - 1] - form.baseline;
  const ShapeVector x = solve_left(rhs, system);
  for (std::size_t k = 0; k < m; ++k) {
    auto& target = slots[k].first ? form.lambda : form.theta;
    target[slots[k].second - 1] = x[k];
  }
  return form;
}

MembershipCertificate membership(std::span<const Rational> c, ConeKind kind) {
  if (c.empty()) throw DimensionMismatch(1, 0);
  std::optional<Violation> violated;
  for (Shape s : defining_shapes(kind)) {
    const PredicateResult r = check_shape(c, s);
    if (!r.holds) {
      violated = Violation{s, *r.witness};
      break;
    }
  }

  if (!simplicial(kind)) {
    if (violated) return {Verdict::out_of_cone, std::nullopt, std::nullopt, violated};
    ConvexCanonicalForm form = decompose_convex_canonical(c);
    Decomposition d = form.as_decomposition(c.size());
    return {Verdict::in_cone, std::move(d), std::move(form), std::nullopt};
  }

  Decomposition d = decompose_via_matrix(c, kind);
  const bool conic = d.is_conic();
  if (conic == violated.has_value()) {
    throw StructuralViolation(
        "coordinates and defining inequalities disagree for " +
        std::string(to_string(kind)));
  }
  if (!conic) return {Verdict::out_of_cone, std::nullopt, std::nullopt, violated};
  return {Verdict::in_cone, std::move(d), std::nullopt, std::nullopt};
}

}  // namespace shapecone
