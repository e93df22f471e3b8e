#include <doctest.h>

#include "shapecone/io.hpp"
#include "shapecone/matrices.hpp"
#include "support.hpp"

using namespace shapecone;
using namespace shapecone::testing;

TEST_CASE("matrix JSON layout") {
  const nlohmann::json j = matrix_to_json(matrix_M_inverse(3));
  CHECK(j.dump() == R"j({"n":3,"rows":[["1","-1/2","0"],["0","1","0"],["0","-1/2","1"]]})j");
  const nlohmann::json scaled = matrix_to_json(matrix_M(5), true);
  CHECK(scaled.at("scale") == "1/12");
  CHECK(scaled.at("rows")[0] == nlohmann::json({"12", "9", "6", "3", "0"}));
}

TEST_CASE("matrix CSV layout") {
  CHECK(matrix_to_csv(matrix_N_inverse(3)) == "1,-2,1\n0,2,-2\n0,0,1\n");
  CHECK(matrix_to_csv(matrix_M_inverse(5), true) ==
        "# scale 1/4\n4,-3,0,0,0\n0,6,-4,0,0\n0,-3,8,-3,0\n0,0,-4,6,0\n0,0,0,-3,4\n");
}

TEST_CASE("JSON and CSV read back bit-exact") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 9;
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, 40, 30);
    const bool cd = t % 2 == 1;
    CHECK(matrix_from_json(nlohmann::json::parse(matrix_to_json(m, cd).dump())) == m);
    CHECK(matrix_from_csv(matrix_to_csv(m, cd)) == m);
    CHECK(matrix_to_json(matrix_from_json(matrix_to_json(m, cd)), cd) == matrix_to_json(m, cd));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    for (MatrixId id : {MatrixId::M, MatrixId::Minv, MatrixId::N, MatrixId::Ninv}) {
      const RMatrix m = named_matrix(id, n);
      CHECK(matrix_from_csv(matrix_to_csv(m, true)) == m);
    }
  }
}

TEST_CASE("malformed CSV") {
  try {
    matrix_from_csv("1,2\n3,x\n");
    FAIL("expected MalformedEntry");
  } catch (const MalformedEntry& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), DimensionMismatch);
}

TEST_CASE("generator set output") {
  const GeneratorSet g = generators(ConeKind::increasing_convex, 3);
  CHECK(generators_to_json(g).dump() ==
        R"j({"labels":["1","a(1)","a(2)"],"n":3,"rows":[["1","1","1"],["0","1/2","1"],["0","0","1"]]})j");
  CHECK(generators_to_csv(g) == "1,1,1,1\na(1),0,1/2,1\na(2),0,0,1\n");
  CHECK(generators_to_csv(g, true) == "# scale 1/2\n1,2,2,2\na(1),0,1,2\na(2),0,0,2\n");
  const auto j = generators_to_json(generators(ConeKind::positive_convex, 4));
  CHECK(matrix_from_json(j) == generators(ConeKind::positive_convex, 4).matrix());
}

TEST_CASE("certificate JSON") {
  const auto out = certificate_to_json(membership(vec({1, 0, 1}), ConeKind::positive_concave));
  CHECK(out.dump() == R"j({"verdict":"out_of_cone","witness":{"index":2,"shape":"concave"}})j");

  const auto in = certificate_to_json(membership(vec({1, 2, 2, 1}), ConeKind::positive_concave));
  CHECK(in.at("verdict") == "in_cone");
  CHECK(in.at("witness").at("labels") == nlohmann::json({"c(1)", "c(2)", "c(3)", "c(4)"}));
  CHECK(in.at("witness").at("coefficients") == nlohmann::json({"1", "2/3", "2/3", "1"}));

  const auto convex = certificate_to_json(membership(vec({2, 1, 1, 2}), ConeKind::positive_convex));
  CHECK(convex.at("witness").at("baseline") == "1");
  CHECK(convex.at("witness").at("lambda") == nlohmann::json({"0", "0", "1"}));
  CHECK(convex.at("witness").at("theta") == nlohmann::json({"0", "0", "1"}));
}

TEST_CASE("shape report JSON") {
  const auto j = report_to_json(classify(vec({1, 0, 1})));
  CHECK(j.at("concave").at("holds") == false);
  CHECK(j.at("concave").at("witness") == 2);
  CHECK(j.at("convex").at("holds") == true);
  CHECK(j.at("log_concave") == "not_applicable");
}
