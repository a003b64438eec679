#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "qplab/rng.hpp"

using namespace qplab;
using namespace qplab::test;

TEST_CASE_TEMPLATE("twisted cubic basics", F, PrimeField, RationalField) {
  auto I = twisted_cubic<F>();
  auto gb = I.groebner_basis();
  CHECK(gb.size() == 3);
  auto h = I.hilbert();
  CHECK(h.dim == 1);
  CHECK(h.degree == 3);
  CHECK(h.hf(0) == 1);
  CHECK(h.hf(1) == 4);
  CHECK(h.hf(2) == 7);
  CHECK(h.hf(3) == 10);
  CHECK(graded_piece_basis(I, 2).size() == 3);
  auto E = elimination_ideal(I, 1);
  CHECK(E.nvars() == 3);
  REQUIRE(E.generators().size() == 1);
  CHECK(E == make_ideal<F>({"x0*x2 - x1^2"}, 3));
}

namespace {

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const MonomialOrder& ord) {
  auto lf = f.leading_term(ord), lg = g.leading_term(ord);
  Monomial l = lf.mono;
  for (int i = 0; i < f.nvars(); ++i) l.set(i, std::max(lf.mono[i], lg.mono[i]));
  const F& K = f.field();
  return f.times_monomial(l / lf.mono, K.inv(lf.coef)) - g.times_monomial(l / lg.mono, K.inv(lg.coef));
}

// Buchberger criterion: every S-polynomial reduces to zero.
template <class F>
bool buchberger_oracle(const std::vector<Polynomial<F>>& G, const MonomialOrder& ord) {
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j)
      if (!reduce(s_polynomial(G[i], G[j], ord), G, ord).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE_TEMPLATE("principal ideal is its own basis in every order", F, PrimeField, RationalField) {
  auto I = make_ideal<F>({"x0"}, 3);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
    const auto& gb = I.groebner_basis(ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == P<F>("x0", 3));
  }
}

TEST_CASE_TEMPLATE("twisted cubic basis passes the S-pair oracle", F, PrimeField, RationalField) {
  auto I = twisted_cubic<F>();
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
    const auto& gb = I.groebner_basis(ord);
    CHECK(buchberger_oracle(gb, ord));
    for (const auto& g : I.generators()) CHECK(reduce(g, gb, ord).is_zero());
  }
  const auto& gb = I.groebner_basis();
  CHECK(Ideal<F>(F{}, 4, gb).groebner_basis() == gb);
}

TEST_CASE_TEMPLATE("block order basis of two twisted cubic quadrics", F, PrimeField, RationalField) {
  auto I = make_ideal<F>({"x0*x3 - x1*x2", "x1*x3 - x2^2"}, 4);
  auto ord = MonomialOrder::block(1);
  const auto& gb = I.groebner_basis(ord);
  CHECK(buchberger_oracle(gb, ord));
  auto E = elimination_ideal(I, 1);
  CHECK(E == make_ideal<F>({"x0*x2 - x1^2"}, 3));
}

TEST_CASE("random ideals pass the S-pair oracle") {
  PrimeField K;
  Rng rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Polynomial<PrimeField>> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Term<PrimeField>> terms;
      for (const auto& m : monomials_of_degree(4, 2))
        if (rng.next() % 3 == 0) terms.push_back({m, rng.element(K)});
      gens.push_back(Polynomial<PrimeField>::from_terms(K, 4, terms));
    }
    Ideal<PrimeField> I(K, 4, gens);
    auto ord = MonomialOrder::grevlex();
    const auto& gb = I.groebner_basis(ord);
    CHECK(buchberger_oracle(gb, ord));
    for (const auto& g : gens) CHECK(reduce(g, gb, ord).is_zero());
  }
}

TEST_CASE_TEMPLATE("elimination examples", F, PrimeField, RationalField) {
  CHECK(elimination_ideal(make_ideal<F>({"x0 - x1"}, 3), 1).is_zero());
  auto v = make_ideal<F>({"x0*x3 - x1^2", "x0*x4 - x1*x2", "x0*x5 - x2^2", "x1*x4 - x2*x3", "x1*x5 - x2*x4",
                          "x3*x5 - x4^2"},
                         6);
  CHECK(graded_piece_basis(v, 2).size() == 6);
  auto E = elimination_ideal(v, 6);
  CHECK(E.nvars() == 0);
  CHECK(E.is_zero());
  CHECK_THROWS_AS(elimination_ideal(v, 7), Error);
}

TEST_CASE_TEMPLATE("quotients and saturations", F, PrimeField, RationalField) {
  auto x0 = P<F>("x0", 3);
  CHECK(ideal_quotient(make_ideal<F>({"x0^2"}, 3), x0) == make_ideal<F>({"x0"}, 3));
  CHECK(ideal_quotient(make_ideal<F>({"x0*x1"}, 3), x0) == make_ideal<F>({"x1"}, 3));
  CHECK(saturate_by(make_ideal<F>({"x0*x1", "x0*x2"}, 3), x0) == make_ideal<F>({"x1", "x2"}, 3));
  CHECK(saturate_by(make_ideal<F>({"x0^2", "x0*x1"}, 3), x0).is_unit());
  auto tc = twisted_cubic<F>();
  CHECK(saturate_by(tc, P<F>("x0 + x3", 4)) == tc);
  CHECK_THROWS_AS(ideal_quotient(tc, Polynomial<F>(F{}, 4)), Error);
  CHECK_THROWS_AS(saturate_by(tc, Polynomial<F>(F{}, 4)), Error);
}

TEST_CASE_TEMPLATE("Hilbert function agrees with graded piece dimensions", F, PrimeField, RationalField) {
  auto tc = twisted_cubic<F>();
  auto q = make_ideal<F>({"x0*x1 - x2*x3", "x0^2 + x1^2 - x2^2 - x3^2 - x4^2"}, 5);
  for (const auto* I : {&tc, &q}) {
    const auto& h = I->hilbert();
    for (int t = 0; t <= 5; ++t)
      CHECK(static_cast<int64_t>(graded_piece_basis(*I, t).size()) + h.hf(t) ==
            static_cast<int64_t>(binomial(I->nvars() - 1 + t, t)));
    // polynomial agrees with the function past stabilization
    for (int t = h.stabilization_degree; t < h.stabilization_degree + 4; ++t) CHECK(h.hp(t) == h.hf(t));
  }
  CHECK(q.hilbert().dim == 2);
  CHECK(q.hilbert().degree == 4);
}

TEST_CASE("Hilbert data of the zero ideal and of the unit ideal") {
  Ideal<PrimeField> zero(PrimeField{}, 4);
  for (int t = 0; t <= 6; ++t) CHECK(zero.hilbert().hf(t) == static_cast<int64_t>(binomial(3 + t, t)));
  CHECK(zero.hilbert().dim == 3);
  CHECK(zero.hilbert().degree == 1);
  CHECK(graded_piece_basis(zero, 3).empty());
  auto unit = make_ideal<PrimeField>({"1"}, 3);
  CHECK(unit.is_unit());
  CHECK_THROWS_AS(unit.hilbert(), Error);
  CHECK_THROWS_AS(graded_piece_basis(zero, -1), Error);
}

TEST_CASE("Hilbert function matches a standard-monomial count") {
  // count monomials of degree t outside the initial ideal directly
  auto I = make_ideal<PrimeField>({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2", "x0^3 + x3^3"}, 4);
  const auto& gb = I.groebner_basis();
  const auto& h = I.hilbert();
  for (int t = 0; t <= 6; ++t) {
    int64_t standard = 0;
    for (const auto& m : monomials_of_degree(4, t)) {
      bool in = false;
      for (const auto& g : gb) in |= g.leading_term().mono.divides(m);
      standard += !in;
    }
    CHECK(h.hf(t) == standard);
  }
  CHECK(h.dim == 0);
  CHECK(h.degree == 9);
}

TEST_CASE("cache keys ignore generator order but not field or order") {
  auto a = make_ideal<PrimeField>({"x0*x2 - x1^2", "x1*x3 - x2^2"}, 4);
  auto b = make_ideal<PrimeField>({"x1*x3 - x2^2", "x0*x2 - x1^2"}, 4);
  auto c = make_ideal<PrimeField>({"x0*x2 - x1^2", "x1*x3 - x2^2"}, 4, PrimeField(30011));
  auto g = MonomialOrder::grevlex();
  CHECK(a.cache_key(g) == b.cache_key(g));
  CHECK(a.cache_key(g) != c.cache_key(g));
  CHECK(a.cache_key(g) != a.cache_key(MonomialOrder::lex()));
  CHECK(a.cache_key(g) != a.cache_key(g, 3));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE_TEMPLATE("minimal generators of the twisted cubic plus a redundant cubic", F, PrimeField, RationalField) {
  auto I = make_ideal<F>({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2", "x0^2*x2 - x0*x1^2"}, 4);
  CHECK(minimal_generators(I).size() == 3);
  CHECK(minimal_generator_count(I, 2) == 3);
  CHECK(minimal_generator_count(I, 3) == 0);
}
