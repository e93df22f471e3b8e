#include <doctest.h>

#include "shapecone/matrices.hpp"
#include "support.hpp"

using namespace shapecone;
using namespace shapecone::testing;

TEST_CASE("M for small n") {
  CHECK(matrix_M(1) == RMatrix{{1}});
  CHECK(matrix_M(2) == RMatrix::identity(2));
  CHECK(matrix_M(5) == Rational(1, 12) * RMatrix{{12, 9, 6, 3, 0},
                                                 {0, 12, 8, 4, 0},
                                                 {0, 6, 12, 6, 0},
                                                 {0, 4, 8, 12, 0},
                                                 {0, 3, 6, 9, 12}});
}

TEST_CASE("M inverse closed form") {
  CHECK(matrix_M_inverse(2) == RMatrix::identity(2));
  CHECK(matrix_M_inverse(1) == RMatrix{{1}});
  const RMatrix m4 = matrix_M_inverse(4);
  CHECK(m4(0, 0) == Rational(1));
  CHECK(m4(1, 1) == q(4, 3));
  CHECK(m4(2, 2) == q(4, 3));
  CHECK(m4(3, 3) == Rational(1));
  CHECK(m4 == invert(matrix_M(4)));
  CHECK(matrix_M_inverse(5) == Rational(1, 12) * RMatrix{{12, -9, 0, 0, 0},
                                                         {0, 18, -12, 0, 0},
                                                         {0, -9, 24, -9, 0},
                                                         {0, 0, -12, 18, 0},
                                                         {0, 0, 0, -9, 12}});
}

TEST_CASE("N and its inverse") {
  CHECK(matrix_N(1) == RMatrix{{1}});
  CHECK(matrix_N(2) == RMatrix{{1, 1}, {0, 1}});
  CHECK(matrix_N_inverse(2) == RMatrix{{1, -1}, {0, 1}});
  CHECK(matrix_N_inverse(3) == RMatrix{{1, -2, 1}, {0, 2, -2}, {0, 0, 1}});
  CHECK(is_identity(naive_product(matrix_N(3), RMatrix{{1, -2, 1}, {0, 2, -2}, {0, 0, 1}})));
  CHECK(matrix_N_inverse(5) == RMatrix{{1, -4, 3, 0, 0},
                                       {0, 4, -6, 2, 0},
                                       {0, 0, 3, -4, 1},
                                       {0, 0, 0, 2, -2},
                                       {0, 0, 0, 0, 1}});
  // N(i,j) = (j−i+1)/(n−i+1) above the first row.
  const RMatrix n7 = matrix_N(7);
  for (long long i = 2; i <= 7; ++i) {
    for (long long j = 1; j <= 7; ++j) {
      const Rational want = j < i ? Rational(0) : Rational(j - i + 1, 7 - i + 1);
      CHECK(n7(i - 1, j - 1) == want);
    }
  }
}

TEST_CASE("Z and its inverse") {
  CHECK(matrix_Z(3) == RMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(matrix_Z_inverse(3) == RMatrix{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
  CHECK(matrix_Z(1) == RMatrix{{1}});
  CHECK(matrix_Z_inverse(1) == RMatrix{{1}});
  CHECK(matrix_Z_inverse(2) == RMatrix{{1, -1}, {0, 1}});
}

TEST_CASE("M entries below the diagonal are (j-1)/(i-1)") {
  const RMatrix m = matrix_M(9);
  for (long long i = 1; i <= 9; ++i) {
    for (long long j = 1; j <= 9; ++j) {
      Rational want = 1;
      if (i > j) want = Rational(j - 1, i - 1);
      if (i < j) want = Rational(9 - j, 9 - i);
      CHECK(m(i - 1, j - 1) == want);
    }
  }
}

TEST_CASE("structure report examples") {
  CHECK(structure_report(matrix_M(5)).is_centrally_symmetric);
  const StructureReport inv = structure_report(matrix_M_inverse(5));
  CHECK(inv.is_centrally_symmetric);
  CHECK(inv.band_lower == 1);
  CHECK(inv.band_upper == 1);
  CHECK(inv.exceptional_columns == std::vector<std::size_t>{1, 5});
  CHECK(inv.modal_column_sum == Rational(0));

  const StructureReport id = structure_report(RMatrix::identity(4));
  CHECK(id.is_centrally_symmetric);
  CHECK(id.band_lower == 0);
  CHECK(id.band_upper == 0);
  CHECK(id.column_sums == ShapeVector(4, Rational(1)));
  CHECK(id.row_sums == ShapeVector(4, Rational(1)));
  CHECK(id.exceptional_columns.empty());

  const StructureReport ninv = structure_report(matrix_N_inverse(5));
  CHECK(ninv.band_lower == 0);
  CHECK(ninv.band_upper == 2);
  CHECK(ninv.diagonals == std::vector<long>{0, 1, 2});
  CHECK(ninv.exceptional_columns == std::vector<std::size_t>{1});
  CHECK(ninv.exceptional_rows == std::vector<std::size_t>{5});
  CHECK_FALSE(ninv.is_centrally_symmetric);

  // Tie between sums 1 and 0: zero is taken as the modal value.
  const StructureReport z2 = structure_report(matrix_Z_inverse(2));
  CHECK(z2.modal_column_sum == Rational(0));
  CHECK(z2.exceptional_columns == std::vector<std::size_t>{1});

  CHECK_THROWS_AS(structure_report(RMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("exact inverse pairs and structural claims, n = 1..24") {
  for (std::size_t n = 1; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(is_identity(naive_product(matrix_M(n), matrix_M_inverse(n))));
    CHECK(is_identity(naive_product(matrix_N(n), matrix_N_inverse(n))));
    CHECK(is_identity(naive_product(matrix_Z(n), matrix_Z_inverse(n))));
    CHECK(matrix_M_inverse(n) == invert(matrix_M(n)));

    const StructureReport m = structure_report(matrix_M(n));
    const StructureReport mi = structure_report(matrix_M_inverse(n));
    CHECK(m.is_centrally_symmetric);
    CHECK(mi.is_centrally_symmetric);
    if (n >= 2) {
      for (std::size_t j = 2; j < n; ++j) CHECK(mi.column_sums[j - 1].is_zero());
      CHECK(mi.band_lower <= 1);
      CHECK(mi.band_upper <= 1);
    }
  }
}

TEST_CASE("monotone concave generator matrices have almost-diagonal inverses") {
  for (std::size_t n = 2; n <= 24; ++n) {
    for (ConeKind kind : {ConeKind::increasing_concave, ConeKind::decreasing_concave}) {
      CAPTURE(n);
      const StructureReport r = structure_report(invert(generator_matrix(kind, n)));
      CHECK(r.almost_diagonal());
      CHECK(r.constant_sums_but_one());
    }
  }
  // The increasing family's inverse is tridiagonal with one special row and
  // column; n = 4 spelled out.
  CHECK(invert(generator_matrix(ConeKind::increasing_concave, 4)) ==
        RMatrix{{1, -1, 0, 0}, {0, 2, -2, 0}, {0, -1, 4, -3}, {0, 0, -2, 3}});
}

TEST_CASE("generator matrix of a non-simplicial cone is rejected") {
  CHECK_THROWS_AS(generator_matrix(ConeKind::positive_convex, 4), Error);
}

TEST_CASE("matrix ids") {
  for (auto name : {"M", "Minv", "N", "Ninv", "Z", "Zinv"}) {
    const auto id = parse_matrix_id(name);
    REQUIRE(id.has_value());
    CHECK(to_string(*id) == name);
  }
  CHECK_FALSE(parse_matrix_id("Q").has_value());
  CHECK(named_matrix(MatrixId::Zinv, 3) == matrix_Z_inverse(3));
}
