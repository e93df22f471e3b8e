#include <doctest.h>

#include <algorithm>

#include "shapecone/decompose.hpp"
#include "shapecone/oracle.hpp"
#include "support.hpp"

using namespace shapecone;
using namespace shapecone::testing;

namespace {

// Conic coefficients of a random point in `kind`, with some exact zeros so
// that facets are exercised.
ShapeVector draw(std::mt19937_64& rng, std::size_t count) {
  ShapeVector c = random_coefficients(rng, count);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  if (count > 1) c[pick(rng)] = 0;
  return c;
}

GreedyOptions random_order(std::mt19937_64& rng) {
  GreedyOptions o;
  o.pick = [&rng](std::span<const std::size_t> singular) {
    std::uniform_int_distribution<std::size_t> d(0, singular.size() - 1);
    return singular[d(rng)];
  };
  return o;
}

}  // namespace

TEST_CASE("concave greedy examples") {
  CHECK(decompose_concave_greedy(vec({0, 1, 0})).coefficients == vec({0, 1, 0}));
  const Decomposition d = decompose_concave_greedy(vec({1, 2, 2, 1}));
  CHECK(d.coefficients == vec({1, q(2, 3), q(2, 3), 1}));
  CHECK(naive_combination(generators(ConeKind::positive_concave, 4).rows, d.coefficients) ==
        vec({1, 2, 2, 1}));
  CHECK(d.coefficients == solve_left(vec({1, 2, 2, 1}), generators(ConeKind::positive_concave, 4).matrix()));
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(decompose_concave_greedy(standard_concave(n, k)).coefficients ==
            unit_vector(n, k - 1));
    }
  }
  CHECK_THROWS_AS(decompose_concave_greedy(vec({1, 0, 1})), NotInCone);
  CHECK_THROWS_AS(decompose_concave_greedy(vec({-1, 0, -1})), NotInCone);
}

TEST_CASE("increasing convex greedy examples") {
  CHECK(decompose_increasing_convex_greedy(vec({0, 0, 1, 2})).coefficients ==
        vec({0, 0, 2, 0}));
  CHECK(decompose_increasing_convex_greedy(vec({0, 1, 2, 3})).coefficients ==
        vec({0, 3, 0, 0}));
  CHECK(decompose_increasing_convex_greedy(vec({1, 1, 1, 1, 1})).coefficients ==
        vec({1, 0, 0, 0, 0}));
  CHECK(decompose_increasing_convex_greedy(vec({5})).coefficients == vec({5}));
  CHECK_THROWS_AS(decompose_increasing_convex_greedy(vec({2, 1, 2})), NotInCone);
  CHECK_THROWS_AS(decompose_increasing_convex_greedy(vec({0, 2, 3})), NotInCone);
}

TEST_CASE("decreasing convex greedy examples") {
  CHECK(decompose_decreasing_convex_greedy(vec({1, 0, 0, 0})).coefficients ==
        vec({0, 0, 0, 1}));
  CHECK(decompose_decreasing_convex_greedy(vec({3, 2, 1, 0})).coefficients ==
        vec({0, 3, 0, 0}));
  const Decomposition d = decompose_decreasing_convex_greedy(vec({2, 1, 1, 1}));
  CHECK(d.coefficients == vec({1, 0, 0, 1}));
  CHECK(d.reconstruct() == vec({2, 1, 1, 1}));
  CHECK_THROWS_AS(decompose_decreasing_convex_greedy(vec({0, 1})), NotInCone);
}

TEST_CASE("decompose via matrix examples") {
  const Decomposition ones = decompose_via_matrix(vec({1, 1, 1, 1, 1}), ConeKind::increasing_convex);
  CHECK(ones.coefficients == vec({1, 0, 0, 0, 0}));
  CHECK(ones.labels().front() == "1");

  const Decomposition d = decompose_via_matrix(vec({0, 1, 2, 4}), ConeKind::increasing_convex);
  CHECK(d.coefficients == vec({0, 3, 0, 1}));
  CHECK(d.coefficients == decompose_increasing_convex_greedy(vec({0, 1, 2, 4})).coefficients);

  // (1,0,1) has a negative coordinate in the concave basis.
  const Decomposition out = decompose_via_matrix(vec({1, 0, 1}), ConeKind::positive_concave);
  CHECK(out.coefficients == vec({1, -1, 1}));
  CHECK_FALSE(out.is_conic());
  CHECK(naive_combination(generators(ConeKind::positive_concave, 3).rows, out.coefficients) ==
        vec({1, 0, 1}));

  CHECK_THROWS_AS(decompose_via_matrix(vec({1, 0, 1}), ConeKind::positive_convex), Error);
}

TEST_CASE("canonical convex form examples") {
  const ConvexCanonicalForm f = decompose_convex_canonical(vec({2, 1, 1, 2}));
  CHECK(f.baseline == Rational(1));
  CHECK(f.lambda == vec({0, 0, 1}));
  CHECK(f.theta == vec({0, 0, 1}));
  CHECK(f.reconstruct(4) == vec({2, 1, 1, 2}));

  const ConvexCanonicalForm ones = decompose_convex_canonical(vec({1, 1, 1}));
  CHECK(ones.baseline == Rational(1));
  CHECK(ones.lambda == vec({0, 0}));
  CHECK(ones.theta == vec({0, 0}));

  const ConvexCanonicalForm a2 = decompose_convex_canonical(standard_increasing_convex(5, 2));
  CHECK(a2.baseline == Rational(0));
  CHECK(a2.lambda == vec({0, 1, 0, 0}));
  CHECK(a2.theta == vec({0, 0, 0, 0}));

  const ConvexCanonicalForm v = decompose_convex_canonical(vec({1, 0, 1}));
  CHECK(v.baseline == Rational(0));
  CHECK(v.lambda == vec({0, 1}));
  CHECK(v.theta == vec({0, 1}));

  CHECK(decompose_convex_canonical(vec({4})).baseline == Rational(4));
  CHECK_THROWS_AS(decompose_convex_canonical(vec({0, 1, 0})), NotInCone);

  CHECK(convex_canonical_by_linear_solve(vec({2, 1, 1, 2})) == f);
  CHECK(convex_canonical_by_linear_solve(vec({1, 0, 1})) == v);
}

TEST_CASE("membership examples") {
  const MembershipCertificate out = membership(vec({1, 0, 1}), ConeKind::positive_concave);
  CHECK(out.verdict == Verdict::out_of_cone);
  REQUIRE(out.violation.has_value());
  CHECK(*out.violation == Violation{Shape::concave, 2});

  const MembershipCertificate in = membership(vec({1, 0, 1}), ConeKind::positive_convex);
  CHECK(in.verdict == Verdict::in_cone);
  REQUIRE(in.canonical.has_value());
  CHECK(in.canonical->baseline == Rational(0));
  CHECK(in.canonical->lambda == vec({0, 1}));
  CHECK(in.canonical->theta == vec({0, 1}));
  REQUIRE(in.decomposition.has_value());
  CHECK(in.decomposition->reconstruct() == vec({1, 0, 1}));

  const MembershipCertificate c3 =
      membership(vec({0, q(1, 2), 1, q(1, 2), 0}), ConeKind::positive_concave);
  CHECK(c3.verdict == Verdict::in_cone);
  CHECK(c3.decomposition->coefficients == unit_vector(5, 2));

  const MembershipCertificate neg = membership(vec({1, -1, 3}), ConeKind::positive_convex);
  CHECK(neg.verdict == Verdict::out_of_cone);
  CHECK(*neg.violation == Violation{Shape::positive, 2});

  // The folded positive_convex decomposition uses 𝟏 = a(1) + b(1).
  const MembershipCertificate flat = membership(vec({3, 3, 3}), ConeKind::positive_convex);
  CHECK(flat.decomposition->coefficients == vec({3, 0, 3, 0}));
}

TEST_CASE("round trip through every simplicial kind") {
  std::mt19937_64 rng(5);
  for (ConeKind kind : kSimplicialConeKinds) {
    for (std::size_t n = 1; n <= 20; n += (n < 6 ? 1 : 7)) {
      const GeneratorSet g = generators(kind, n);
      for (int t = 0; t < 30; ++t) {
        const ShapeVector lambda = draw(rng, n);
        const ShapeVector v = naive_combination(g.rows, lambda);
        CHECK(decompose_via_matrix(v, kind).coefficients == lambda);
        const MembershipCertificate c = membership(v, kind);
        CHECK(c.verdict == Verdict::in_cone);
        CHECK(c.decomposition->coefficients == lambda);
      }
    }
  }
}

TEST_CASE("greedy and matrix decompositions agree") {
  std::mt19937_64 rng(6);
  for (std::size_t n = 1; n <= 14; ++n) {
    for (int t = 0; t < 25; ++t) {
      const ShapeVector c = naive_combination(generators(ConeKind::positive_concave, n).rows,
                                              draw(rng, n));
      CHECK(decompose_concave_greedy(c) == decompose_via_matrix(c, ConeKind::positive_concave));

      const ShapeVector up = naive_combination(generators(ConeKind::increasing_convex, n).rows,
                                               draw(rng, n));
      CHECK(decompose_increasing_convex_greedy(up) ==
            decompose_via_matrix(up, ConeKind::increasing_convex));

      const ShapeVector down = naive_combination(
          generators(ConeKind::decreasing_convex, n).rows, draw(rng, n));
      CHECK(decompose_decreasing_convex_greedy(down) ==
            decompose_via_matrix(down, ConeKind::decreasing_convex));
    }
  }
}

TEST_CASE("concave greedy steps: closed-form lambda, kink locality, feasibility") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 3; n <= 12; ++n) {
    for (int t = 0; t < 20; ++t) {
      const ShapeVector c = naive_combination(generators(ConeKind::positive_concave, n).rows,
                                              draw(rng, n));
      std::size_t interior_steps = 0;
      GreedyOptions o;
      o.observer = [&](const GreedyStep& s) {
        CHECK(predicate(s.after, Shape::positive));
        CHECK(predicate(s.after, Shape::concave));
        const ShapeVector before = second_differences(s.before);
        const ShapeVector after = second_differences(s.after);
        if (s.index == 1 || s.index == n) return;
        ++interior_steps;
        // One-unknown solve: the λ that zeroes the second difference at i.
        const ShapeVector g = second_differences(standard_concave(n, s.index));
        const std::size_t k = s.index - 2;
        CHECK(s.lambda == before[k] / g[k]);
        CHECK(s.lambda.sign() > 0);
        CHECK(after[k].is_zero());
        for (std::size_t j = 0; j < before.size(); ++j) {
          if (j != k) CHECK(before[j] == after[j]);
        }
      };
      decompose_concave_greedy(c, o);
      CHECK(interior_steps <= n - 2);
    }
  }
}

TEST_CASE("increasing convex greedy steps keep the remainder feasible") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int t = 0; t < 20; ++t) {
      const ShapeVector c = naive_combination(
          generators(ConeKind::increasing_convex, n).rows, draw(rng, n));
      GreedyOptions o;
      o.observer = [&](const GreedyStep& s) {
        CHECK(brute_force_membership(s.after, ConeKind::increasing_convex));
        CHECK(s.lambda.sign() >= 0);
        if (s.index >= 2) {
          const ShapeVector before = second_differences(s.before);
          const ShapeVector after = second_differences(s.after);
          const ShapeVector g = second_differences(standard_increasing_convex(n, s.index));
          const std::size_t k = s.index - 2;
          CHECK(s.lambda == before[k] / g[k]);
          for (std::size_t j = 0; j < before.size(); ++j) {
            if (j != k) CHECK(before[j] == after[j]);
          }
        }
      };
      decompose_increasing_convex_greedy(c, o);
    }
  }
}

TEST_CASE("greedy results do not depend on the order singular indices are removed") {
  std::mt19937_64 rng(10);
  std::mt19937_64 order_rng(11);
  for (std::size_t n = 3; n <= 12; ++n) {
    for (int t = 0; t < 20; ++t) {
      const ShapeVector c = naive_combination(generators(ConeKind::positive_concave, n).rows,
                                              draw(rng, n));
      CHECK(decompose_concave_greedy(c, random_order(order_rng)) ==
            decompose_concave_greedy(c));
      const ShapeVector up = naive_combination(
          generators(ConeKind::increasing_convex, n).rows, draw(rng, n));
      CHECK(decompose_increasing_convex_greedy(up, random_order(order_rng)) ==
            decompose_increasing_convex_greedy(up));
    }
  }
}

TEST_CASE("canonical convex form: reconstruction and uniqueness") {
  std::mt19937_64 rng(12);
  std::mt19937_64 order_rng(13);
  for (std::size_t n = 1; n <= 12; ++n) {
    const GeneratorSet g = generators(ConeKind::positive_convex, n);
    for (int t = 0; t < 40; ++t) {
      ShapeVector c = naive_combination(g.rows, draw(rng, g.size()));
      c = c + constant_vector(n, random_coefficients(rng, 1)[0]);
      const ConvexCanonicalForm f = decompose_convex_canonical(c);
      CHECK(f.baseline == *std::min_element(c.begin(), c.end()));
      CHECK(f.reconstruct(n) == c);
      CHECK(f.as_decomposition(n).reconstruct() == c);
      CHECK(f.as_decomposition(n).is_conic());
      CHECK(std::all_of(f.lambda.begin(), f.lambda.end(), [](auto& x) { return x.sign() >= 0; }));
      CHECK(std::all_of(f.theta.begin(), f.theta.end(), [](auto& x) { return x.sign() >= 0; }));
      CHECK(decompose_convex_canonical(c, random_order(order_rng)) == f);
      CHECK(convex_canonical_by_linear_solve(c) == f);
    }
  }
}
