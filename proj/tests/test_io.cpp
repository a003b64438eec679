#include "doctest.h"
#include "helpers.hpp"
#include "qplab/io.hpp"

using namespace qplab;
using namespace qplab::test;

TEST_CASE_TEMPLATE("variety files round-trip", F, PrimeField, RationalField) {
  F K;
  auto S = scroll<F>(K, {1, 2});
  auto text = format_variety(S, {"scroll(1,2)", "published"});
  auto back = parse_variety_text(text, K);
  CHECK(back.ideal == S.ideal);
  CHECK(back.totally_real == S.totally_real);
  REQUIRE(back.param);
  CHECK(back.param->components == S.param->components);
  CHECK(back.name == S.name);
}

TEST_CASE("plane-curve models keep their source ideal") {
  PrimeField K;
  auto C = plane_curve_reembed(fermat_quartic(K), 2, {}, true);
  auto back = parse_variety_text(format_variety(C), K);
  REQUIRE(back.param);
  CHECK(back.param->source_ideal.size() == 1);
  CHECK(point_on(back.ideal, sample_point(back, 3)));
}

TEST_CASE("ideal file parsing") {
  PrimeField K;
  std::string text = "# twisted cubic\nring r=3 char=32003\nx0*x2 - x1^2\nx0*x3 - x1*x2  # second\nx1*x3 - x2^2\n";
  auto I = parse_ideal_text(text, K);
  CHECK(I == twisted_cubic<PrimeField>());
  CHECK(read_ring_header(text).r == 3);
  CHECK_THROWS_AS(parse_ideal_text(text, RationalField{}), Error);
  CHECK_THROWS_AS(parse_ideal_text("ring r=3\nx0\n", K), Error);
  CHECK_THROWS_AS(parse_ideal_text("ring r=2 char=32003\nx5\n", K), Error);
  auto Q = parse_ideal_text("ring r=2 char=0\n1/2*x0^2 - x1*x2\n", RationalField{});
  CHECK(Q.generators().size() == 1);
}
