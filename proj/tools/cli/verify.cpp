#include "verify.hpp"

#include <algorithm>
#include <functional>

#include "shapecone/decompose.hpp"
#include "shapecone/generators.hpp"
#include "shapecone/matrices.hpp"
#include "shapecone/oracle.hpp"

namespace shapecone::cli {

namespace {

RMatrix scaled(const Rational& s, std::initializer_list<std::initializer_list<Rational>> rows) {
  return s * RMatrix(rows);
}

// Reference n = 5 matrices.
RMatrix golden_M() {
  return scaled(Rational(1, 12), {{12, 9, 6, 3, 0},
                                  {0, 12, 8, 4, 0},
                                  {0, 6, 12, 6, 0},
                                  {0, 4, 8, 12, 0},
                                  {0, 3, 6, 9, 12}});
}
RMatrix golden_M_inverse() {
  return scaled(Rational(1, 12), {{12, -9, 0, 0, 0},
                                  {0, 18, -12, 0, 0},
                                  {0, -9, 24, -9, 0},
                                  {0, 0, -12, 18, 0},
                                  {0, 0, 0, -9, 12}});
}
RMatrix golden_N() {
  return scaled(Rational(1, 12), {{12, 12, 12, 12, 12},
                                  {0, 3, 6, 9, 12},
                                  {0, 0, 4, 8, 12},
                                  {0, 0, 0, 6, 12},
                                  {0, 0, 0, 0, 12}});
}
RMatrix golden_N_inverse() {
  return RMatrix{{1, -4, 3, 0, 0},
                 {0, 4, -6, 2, 0},
                 {0, 0, 3, -4, 1},
                 {0, 0, 0, 2, -2},
                 {0, 0, 0, 0, 1}};
}

std::string first_mismatch(const RMatrix& got, const RMatrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return "shape differs";
  for (std::size_t i = 0; i < got.rows(); ++i) {
    for (std::size_t j = 0; j < got.cols(); ++j) {
      if (got(i, j) != want(i, j)) {
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") is " + got(i, j).str() + ", expected " + want(i, j).str();
      }
    }
  }
  return {};
}

class Suite {
 public:
  // `check` returns an empty string on success, else a failure detail.
  void add(std::string name, const std::function<std::string()>& check) {
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    outcomes_.push_back({std::move(name), detail.empty(), std::move(detail)});
  }
  std::vector<CheckOutcome> take() { return std::move(outcomes_); }

 private:
  std::vector<CheckOutcome> outcomes_;
};

std::string zero_sums_except(const ShapeVector& sums, std::vector<std::size_t> allowed,
                             std::string_view what) {
  for (std::size_t k = 0; k < sums.size(); ++k) {
    const bool exempt = std::find(allowed.begin(), allowed.end(), k + 1) != allowed.end();
    if (!exempt && !sums[k].is_zero()) {
      return std::string(what) + " " + std::to_string(k + 1) + " sums to " + sums[k].str();
    }
  }
  return {};
}

std::string band_within(const StructureReport& r, long lo, long hi) {
  for (long d : r.diagonals) {
    if (d < lo || d > hi) return "nonzero diagonal at offset " + std::to_string(d);
  }
  return {};
}

}  // namespace

std::vector<CheckOutcome> run_verification(std::size_t n, std::size_t max_extreme_n) {
  Suite s;
  const RMatrix I = RMatrix::identity(n);

  s.add("M * Minv = I (closed form)", [&] {
    return first_mismatch(matrix_M(n) * matrix_M_inverse(n), I);
  });
  s.add("Minv closed form = eliminated inverse", [&] {
    return first_mismatch(matrix_M_inverse(n), invert(matrix_M(n)));
  });
  s.add("N * Ninv = I", [&] { return first_mismatch(matrix_N(n) * matrix_N_inverse(n), I); });
  s.add("Z * Zinv = I", [&] { return first_mismatch(matrix_Z(n) * matrix_Z_inverse(n), I); });

  s.add("M and Minv centrally symmetric", [&]() -> std::string {
    if (!structure_report(matrix_M(n)).is_centrally_symmetric) return "M is not";
    if (!structure_report(matrix_M_inverse(n)).is_centrally_symmetric) return "Minv is not";
    return {};
  });
  s.add("Minv tridiagonal, column sums 0 except 1 and n", [&] {
    const StructureReport r = structure_report(matrix_M_inverse(n));
    if (auto e = band_within(r, -1, 1); !e.empty()) return e;
    return zero_sums_except(r.column_sums, {1, n}, "column");
  });
  s.add("Ninv band 0..2, zero sums except column 1 and row n", [&] {
    const StructureReport r = structure_report(matrix_N_inverse(n));
    if (auto e = band_within(r, 0, 2); !e.empty()) return e;
    if (auto e = zero_sums_except(r.column_sums, {1}, "column"); !e.empty()) return e;
    return zero_sums_except(r.row_sums, {n}, "row");
  });
  s.add("Zinv band 0..1, column sums 0 except column 1", [&] {
    const StructureReport r = structure_report(matrix_Z_inverse(n));
    if (auto e = band_within(r, 0, 1); !e.empty()) return e;
    return zero_sums_except(r.column_sums, {1}, "column");
  });

  for (ConeKind kind : kAllConeKinds) {
    s.add("generators of " + std::string(to_string(kind)) + " lie in the cone", [&]() -> std::string {
      const GeneratorSet g = generators(kind, n);
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (!brute_force_membership(g.rows[k], kind)) return g.labels[k] + " is outside";
        if (*std::max_element(g.rows[k].begin(), g.rows[k].end()) != Rational(1)) {
          return g.labels[k] + " does not have maximum 1";
        }
      }
      return {};
    });
  }

  if (n >= 2) {
    s.add("a(1) + b(1) = 1", [&]() -> std::string {
      const ShapeVector sum =
          standard_increasing_convex(n, 1) + standard_decreasing_convex(n, 1);
      return sum == constant_vector(n, 1) ? "" : "sum differs from the all-ones vector";
    });
  }

  for (ConeKind kind : {ConeKind::increasing_concave, ConeKind::decreasing_concave}) {
    s.add("inverse of " + std::string(to_string(kind)) +
              " generators: <= 3 diagonals, constant sums but one",
          [&]() -> std::string {
            const StructureReport r = structure_report(invert(generator_matrix(kind, n)));
            if (!r.almost_diagonal()) return "nonzeros spread over more than three diagonals";
            if (!r.constant_sums_but_one()) return "more than one exceptional row or column";
            return {};
          });
  }

  for (ConeKind kind : kSimplicialConeKinds) {
    s.add("decompose round trip for " + std::string(to_string(kind)), [&]() -> std::string {
      const GeneratorSet g = generators(kind, n);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ShapeVector coeffs = CoefficientStream(seed).next(g.size());
        const Decomposition d = decompose_via_matrix(g.combine(coeffs), kind);
        if (d.coefficients != coeffs) return "seed " + std::to_string(seed) + " differs";
      }
      return {};
    });
  }

  if (n <= max_extreme_n) {
    for (ConeKind kind : kAllConeKinds) {
      s.add("extreme rays of " + std::string(to_string(kind)), [&]() -> std::string {
        const ExtremeRayReport r = verify_extreme_rays(kind, n, max_extreme_n);
        const std::size_t expected =
            kind == ConeKind::positive_convex && n >= 2 ? 2 * n - 2 : n;
        if (r.rays.size() != expected || !r.all_extreme()) {
          return std::to_string(r.extreme_count()) + " of " + std::to_string(r.rays.size()) +
                 " extreme, expected " + std::to_string(expected);
        }
        return {};
      });
    }
  }

  if (n == 5) {
    s.add("golden M (n=5)", [] { return first_mismatch(matrix_M(5), golden_M()); });
    s.add("golden Minv (n=5)", [] { return first_mismatch(matrix_M_inverse(5), golden_M_inverse()); });
    s.add("golden N (n=5)", [] { return first_mismatch(matrix_N(5), golden_N()); });
    s.add("golden Ninv (n=5)", [] { return first_mismatch(matrix_N_inverse(5), golden_N_inverse()); });
  }
  return s.take();
}

}  // namespace shapecone::cli
