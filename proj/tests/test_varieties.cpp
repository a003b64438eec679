#include "doctest.h"
#include "helpers.hpp"
#include "qplab/variety.hpp"

using namespace qplab;
using namespace qplab::test;

namespace {

template <class F>
void check_samples_on(const Variety<F>& V, int count) {
  for (int s = 0; s < count; ++s) {
    auto pt = sample_point(V, derive_seed(99, s));
    bool nonzero = false;
    for (const auto& x : pt) nonzero |= !V.field().is_zero(x);
    CHECK(nonzero);
    CHECK(point_on(V.ideal, pt));
  }
}

template <class F>
void check_minimal_degree(const Variety<F>& V) {
  CHECK(V.degree() == V.codim() + 1);
  CHECK(static_cast<uint64_t>(graded_piece_dim(V.ideal, 2)) == binomial(V.codim() + 1, 2));
  CHECK(V.totally_real);
}

}  // namespace

TEST_CASE_TEMPLATE("image of a map", F, PrimeField, RationalField) {
  F K;
  auto P1 = projective_space(K, 1);
  RationalMap<F> cubic{2, {P<F>("x0^3", 2), P<F>("x0^2*x1", 2), P<F>("x0*x1^2", 2), P<F>("x1^3", 2)}, {}, true};
  auto C = image_of_map(P1, cubic);
  CHECK(C.dim() == 1);
  CHECK(C.degree() == 3);
  CHECK(C.codim() == 2);
  CHECK(C.ideal == twisted_cubic<F>());

  auto P2 = projective_space(K, 2);
  RationalMap<F> quad{3, {}, {}, true};
  for (const auto& m : monomials_of_degree(3, 2))
    quad.components.push_back(Polynomial<F>::monomial(K, 3, m, K.one()));
  auto V = image_of_map(P2, quad);
  CHECK(graded_piece_dim(V.ideal, 2) == 6);
  CHECK(V.degree() == 4);

  RationalMap<F> id{3, {P<F>("x0", 3), P<F>("x1", 3), P<F>("x2", 3)}, {}, true};
  auto same = image_of_map(P2, id);
  CHECK(same.ideal.is_zero());
  CHECK(same.dim() == 2);

  Variety<F> line{make_ideal<F>({"x0 - x1"}, 3), std::nullopt, true, "line"};
  RationalMap<F> undefined{3, {P<F>("x0^2 - x1^2", 3), P<F>("x0*x1 - x1^2", 3)}, {}, true};
  try {
    (void)image_of_map(line, undefined);
    FAIL("expected indeterminacy");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::indeterminacy);
  }
}

TEST_CASE_TEMPLATE("minimal-degree constructors", F, PrimeField, RationalField) {
  F K;
  for (int dd = 2; dd <= 5; ++dd) {
    auto C = rational_normal_curve(K, dd);
    CHECK(C.dim() == 1);
    check_minimal_degree(C);
  }
  auto C4 = rational_normal_curve(K, 4);
  CHECK(C4.codim() == 3);
  CHECK(graded_piece_dim(C4.ideal, 2) == 6);
  auto S12 = scroll(K, {1, 2});
  CHECK(S12.dim() == 2);
  CHECK(S12.degree() == 3);
  CHECK(S12.codim() == 2);
  check_minimal_degree(S12);
  check_minimal_degree(scroll(K, {1, 1, 2}));
  check_minimal_degree(veronese(K, 2, 2));
  check_minimal_degree(quadric(K, 4));
  CHECK(quadric(K, 4).dim() == 3);
  CHECK(quadric(K, 4).degree() == 2);

  auto cone = scroll(K, {0, 0, 3});
  CHECK(cone.r() == 5);
  CHECK(cone.dim() == 3);
  CHECK(cone.degree() == 3);
  CHECK(cone.codim() == 2);
  try {
    (void)scroll(K, {0, 0});
    FAIL("expected degenerate input");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_input);
  }
}

TEST_CASE("del Pezzo quintic and its container") {
  PrimeField K;
  auto [X, Y] = del_pezzo_quintic(K);
  CHECK(X.r() == 5);
  CHECK(X.dim() == 2);
  CHECK(X.degree() == 5);
  CHECK(graded_piece_dim(X.ideal, 2) == 5);
  CHECK(Y.degree() == Y.codim() + 1);
  CHECK(X.ideal.contains(Y.ideal));
  check_samples_on(X, 20);
}

TEST_CASE("constructor outputs contain their parameterized points") {
  PrimeField K;
  check_samples_on(rational_normal_curve(K, 4), 100);
  check_samples_on(scroll(K, {1, 2}), 100);
  check_samples_on(veronese(K, 2, 3), 30);
  check_samples_on(cmr_curve(K, 5, 8, true, 1), 30);
  check_samples_on(projective_space(K, 2), 5);
}

TEST_CASE("sampling needs a parameterization over the rationals") {
  auto V = Variety<RationalField>{make_ideal<RationalField>({"x0*x1 - x2^2"}, 3), std::nullopt, false, "conic"};
  try {
    (void)sample_point(V, 1);
    FAIL("expected no sampler");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_sampler);
  }
  // over a prime field slicing finds points
  auto W = Variety<PrimeField>{make_ideal<PrimeField>({"x0*x1 - x2^2"}, 3), std::nullopt, false, "conic"};
  CHECK(point_on(W.ideal, sample_point(W, 1)));
}

TEST_CASE("curves of maximal regularity") {
  PrimeField K;
  auto C = cmr_curve(K, 5, 8, true, 1);
  CHECK(C.dim() == 1);
  CHECK(C.degree() == 8);
  CHECK(secant_order(C, coordinate_line(K, 5)) == 5);
  // lies on S(1,3)
  CHECK(C.ideal.contains(scroll(K, {1, 3}).ideal));
  auto D = cmr_curve(K, 4, 6, false, 2);
  CHECK(D.degree() == 6);
  CHECK(secant_order(D, coordinate_line(K, 4)) == 4);
  try {
    (void)cmr_curve(K, 4, 5, true, 1);
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE_TEMPLATE("secant orders on rational normal curves", F, PrimeField, RationalField) {
  F K;
  // x2 = x3 = 0 is the tangent line at [1:0:0:0]
  CHECK(secant_order(rational_normal_curve(K, 3), coordinate_line(K, 3)) == 2);
  // the line through [1:0:0:0:0] and [0:0:0:0:1] is a secant
  Variety<F> L{make_ideal<F>({"x1", "x2", "x3"}, 5), std::nullopt, true, "secant"};
  CHECK(secant_order(rational_normal_curve(K, 4), L) == 2);
  Variety<F> far{make_ideal<F>({"x0 - x1", "x2", "x3 - x1 - x4"}, 5), std::nullopt, true, "line"};
  CHECK(secant_order(rational_normal_curve(K, 4), far) == 0);
}

TEST_CASE("plane quartic re-embeddings follow the degree law") {
  PrimeField K;
  auto f = fermat_quartic(K);
  auto pts = fermat_rational_points(K);
  for (const auto& p : pts) CHECK(f.evaluate(p) == 0u);

  auto w2 = plane_curve_reembed(f, 2, {}, true);
  CHECK(w2.degree() == 8);
  CHECK(w2.r() == 5);
  auto d7 = plane_curve_reembed(f, 2, {pts[0]}, true);
  CHECK(d7.degree() == 7);
  CHECK(d7.r() == 4);
  CHECK(graded_piece_dim(d7.ideal, 2) == 3);
  // the three quadrics are the minors of a 2x3 matrix, so two linear
  // syzygies and HF(3) = 19 leave room for exactly three cubics
  CHECK(minimal_generator_count(d7.ideal, 3) == 3);
  auto d9 = plane_curve_reembed(f, 3, {pts[0], pts[1], pts[2]}, true);
  CHECK(d9.degree() == 9);
  CHECK(d9.r() == 6);
  CHECK(d9.dim() == 1);
  check_samples_on(d9, 10);

  std::vector<uint32_t> off = {1, 1, 1};
  try {
    (void)plane_curve_reembed(f, 2, {off}, true);
    FAIL("expected bad basepoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bad_basepoint);
  }
}
