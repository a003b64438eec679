#include "doctest.h"
#include "helpers.hpp"
#include "qplab/invariants.hpp"
#include "qplab/projection.hpp"

using namespace qplab;
using namespace qplab::test;

TEST_CASE("quadric counts") {
  PrimeField K;
  CHECK(quadric_count(veronese<PrimeField>(K, 2, 3)) == 27);
  CHECK(quadric_count(projective_space<PrimeField>(K, 4)) == 0);
  CHECK(quadric_count(scroll<PrimeField>(K, {1, 2})) == 3);
}

TEST_CASE_TEMPLATE("gradient route agrees with elimination", F, PrimeField, RationalField) {
  F K;
  auto V = veronese<F>(K, 2, 2);
  std::vector<std::vector<typename F::Elem>> pts;
  for (uint64_t s = 1; pts.size() < 3; ++s) pts.push_back(sample_point(V, s));
  for (size_t k = 0; k <= pts.size(); ++k) {
    std::vector<std::vector<typename F::Elem>> gamma(pts.begin(), pts.begin() + k);
    auto X = project_from_points(V, gamma);
    CHECK(quadrics_after_projection(V, gamma) == quadric_count(X));
  }
}

TEST_CASE("quadratic persistence of minimal-degree varieties equals the codimension") {
  PrimeField K;
  CHECK(quadratic_persistence(quadric<PrimeField>(K, 4), 3, 1).value == 1);
  auto C = rational_normal_curve<PrimeField>(K, 5);
  auto cert = quadratic_persistence(C, 3, 2);
  CHECK(cert.value == 4);
  REQUIRE(cert.floor_evidence.size() == 5);
  for (int k = 0; k < 4; ++k) CHECK(cert.floor_evidence[k] > 0);
  CHECK(cert.floor_evidence.back() == 0);
  CHECK(cert.witness.size() == 4);
  CHECK(quadratic_persistence(C, 3, 99).value == 4);
  CHECK(quadratic_persistence(projective_space<PrimeField>(K, 3), 2, 1).value == 0);
}

TEST_CASE("Pythagoras bounds") {
  PrimeField K;
  auto C = rational_normal_curve<PrimeField>(K, 4);
  REQUIRE(C.totally_real);
  auto b = py_bounds(C, 3, &C);
  CHECK(b.lower == 2);
  CHECK(b.upper == 2);
  CHECK(b.collapsed());
  auto ambient = py_bounds(C, 3);
  CHECK(ambient.upper == 5);

  auto unflagged = C;
  unflagged.totally_real = false;
  try {
    py_bounds(unflagged, 3);
    FAIL("unflagged variety accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::totally_real_required);
  }
  auto Q = quadric<PrimeField>(K, 4);
  try {
    py_bounds(C, 3, &Q);
    FAIL("foreign container accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bad_container);
  }
}

TEST_CASE("classification verdicts") {
  PrimeField K;
  auto S = scroll<PrimeField>(K, {2, 2});
  auto v = classify(S);
  CHECK(v.is_minimal_degree);
  CHECK_FALSE(v.is_d_c2);

  auto [X, Y] = del_pezzo_quintic(K);
  auto st = strand_table(X, 1);
  auto qp = quadratic_persistence(X, 3, 1).value;
  auto dp = classify(X, &st, qp);
  CHECK(dp.is_d_c2);
  CHECK(qp == 2);
  CHECK(dp.all_hold());
  auto py = py_bounds(X, qp, &Y);
  CHECK(py.lower == 4);
  CHECK(py.upper == 4);

  auto C = cmr_curve<PrimeField>(K, 6, 9, true, 1);
  auto cs = strand_table(C, 1);
  CHECK(classify(C, &cs).strand_divisor);
}
