#include "doctest.h"
#include "helpers.hpp"
#include "qplab/projection.hpp"

using namespace qplab;
using namespace qplab::test;

TEST_CASE_TEMPLATE("projecting the twisted cubic from a point on it", F, PrimeField, RationalField) {
  F K;
  auto C = rational_normal_curve<F>(K, 3);
  auto q = sample_point(C, 4);
  auto X = project_from_points(C, {q});
  CHECK(X.r() == 2);
  CHECK(graded_piece_dim(X.ideal, 2) == 1);
  CHECK(X.degree() == 2);
  // the composed parameterization lands on the image
  REQUIRE(X.param);
  auto img = X.param->evaluate({K.from_int(3), K.from_int(-2)});
  CHECK(point_on(X.ideal, img));
}

TEST_CASE("projection preconditions") {
  PrimeField K;
  auto C = rational_normal_curve<PrimeField>(K, 3);
  std::vector<uint32_t> off = {1, 1, 1, 2};
  CHECK_THROWS_AS(project_from_points(C, {off}), Error);
  auto q = sample_point(C, 1);
  try {
    project_from_points(C, {q, q});
    FAIL("dependent points accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::rank);
  }
}

TEST_CASE("quadric hypersurface projects onto the whole space") {
  PrimeField K;
  auto Q = quadric<PrimeField>(K, 4);
  auto q = sample_point(Q, 9);
  auto X = project_from_points(Q, {q});
  CHECK(X.r() == 3);
  CHECK(X.ideal.is_zero());
}

TEST_CASE("projecting from two points equals projecting twice") {
  PrimeField K;
  auto V = veronese<PrimeField>(K, 2, 2);
  auto p1 = sample_point(V, 21), p2 = sample_point(V, 22);
  auto both = project_from_points(V, {p1, p2});
  auto swapped = project_from_points(V, {p2, p1});
  CHECK(both.ideal == swapped.ideal);
  auto first = project_from_points(V, {p1});
  auto A = completion_matrix(K, V.ideal.nvars(), {p1});
  auto y = inverse(A).apply(p2);
  std::vector<uint32_t> image(y.begin() + 1, y.end());
  auto twice = project_from_points(first, {image});
  CHECK(twice.ideal == both.ideal);
}

TEST_CASE_TEMPLATE("partial elimination ideals on small examples", F, PrimeField, RationalField) {
  F K;
  auto C = rational_normal_curve<F>(K, 3);
  auto q = sample_point(C, 5);
  auto pei = partial_elimination_ideals(C, q, 2);
  CHECK(pei.dims_deg.at({0, 2}) == 1);
  CHECK(pei.dims_deg.at({1, 1}) == 2);
  CHECK(pei.ideals[1].contains(pei.ideals[0]));
  CHECK(pei.ideals[2].contains(pei.ideals[1]));
  auto id = pei_dimension_identity_check(C, q);
  CHECK(id.holds);
  CHECK(id.dim_i2 == 3);

  auto P = projective_space<F>(K, 3);
  auto pp = partial_elimination_ideals(P, sample_point(P, 2), 2);
  for (const auto& I : pp.ideals) CHECK(I.is_zero());
}

TEST_CASE("identity on the quadric and the Veronese surface") {
  PrimeField K;
  auto Q = quadric<PrimeField>(K, 4);
  auto q = sample_point(Q, 3);
  auto pei = partial_elimination_ideals(Q, q, 1);
  CHECK(pei.dims_deg.at({1, 1}) == 1);
  CHECK(pei.dims_deg.at({0, 2}) == 0);

  auto V = veronese<PrimeField>(K, 2, 2);
  auto id = pei_dimension_identity_check(V, sample_point(V, 8));
  CHECK(id.holds);
  CHECK(id.dim_projection_i2 == 3);
  CHECK(id.dim_k1_1 == 3);
}

TEST_CASE("inner projection of a curve drops the degree by one") {
  PrimeField K;
  auto C = rational_normal_curve<PrimeField>(K, 5);
  auto X = project_from_points(C, {sample_point(C, 31)});
  CHECK(X.degree() == C.degree() - 1);
}
