#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "qplab/strands.hpp"

using namespace qplab;
using namespace qplab::test;

namespace {

// Coefficients of (1 - t)^{r+1} * sum_k HF(k) t^k up to degree `top`.
std::vector<int64_t> k_polynomial(const HilbertData& h, int nvars, int top) {
  std::vector<int64_t> series(top + 1);
  for (int k = 0; k <= top; ++k) series[k] = h.hf(k);
  for (int i = 0; i < nvars; ++i)
    for (int k = top; k >= 1; --k) series[k] -= series[k - 1];
  return series;
}

// For a Betti table living in rows 0..2, coefficient k of the K-polynomial is
// (-1)^{k-1} beta_{k-1,1} + (-1)^k beta_{k-2,2}.
void check_against_k_polynomial(const HilbertData& h, int nvars, const std::vector<int64_t>& b1,
                                const std::vector<int64_t>& b2) {
  const int top = static_cast<int>(std::max(b1.size(), b2.size())) + 1;
  auto kp = k_polynomial(h, nvars, top);
  for (int k = 2; k <= top; ++k) {
    int64_t beta1 = (k - 1 < static_cast<int>(b1.size())) ? b1[k - 1] : 0;
    int64_t beta2 = (k - 2 < static_cast<int>(b2.size())) ? b2[k - 2] : 0;
    int64_t sign = (k % 2) ? 1 : -1;  // (-1)^{k-1}
    CHECK(kp[k] == sign * (beta1 - beta2));
  }
}

}  // namespace

TEST_CASE("wedge bases are colex and ranked consistently") {
  auto w = wedge_basis(5, 3);
  CHECK(w.size() == 10);
  CHECK(w.front() == std::vector<int>{0, 1, 2});
  CHECK(w[1] == std::vector<int>{0, 1, 3});
  CHECK(w[2] == std::vector<int>{0, 2, 3});
  CHECK(w[3] == std::vector<int>{1, 2, 3});
  for (size_t i = 0; i < w.size(); ++i) CHECK(wedge_rank(w[i]) == i);
  CHECK(wedge_basis(4, 0).size() == 1);
  CHECK(wedge_basis(3, 4).empty());
}

TEST_CASE_TEMPLATE("rational normal curves match Eagon-Northcott", F, PrimeField, RationalField) {
  for (int dd = 3; dd <= 5; ++dd) {
    auto C = rational_normal_curve<F>(F{}, dd);
    const int c = dd - 1;
    auto b1 = betti_strand_one(C);
    REQUIRE(b1.size() == static_cast<size_t>(c + 1));
    for (int p = 1; p <= c; ++p) CHECK(b1[p] == p * static_cast<int64_t>(binomial(c + 1, p + 1)));
    auto b2 = betti_strand_two(C, -1);
    for (auto v : b2) CHECK(v == 0);
  }
}

TEST_CASE("scroll strands match Eagon-Northcott and the quadric route") {
  PrimeField K;
  auto S = scroll<PrimeField>(K, {1, 2, 2});
  const int c = S.codim();
  CHECK(S.degree() == c + 1);
  auto b1 = betti_strand_one(S);
  for (int p = 1; p <= c; ++p) {
    CHECK(b1[p] == p * static_cast<int64_t>(binomial(c + 1, p + 1)));
    CHECK(betti_p1_via_quadrics(S, p) == b1[p]);
  }
  auto t = strand_table(S, 5);
  CHECK(t.ell == c);
  CHECK(t.gl_index == StrandTable::kInfinity);
  CHECK(regularity_via_gin(S, 11) == 2);
}

TEST_CASE("cubic Veronese surface against the Hilbert function") {
  PrimeField K;
  auto V = veronese<PrimeField>(K, 2, 3);
  auto b1 = betti_strand_one(V);
  auto b2 = betti_strand_two(V, -1);
  CHECK(b1[1] == 27);
  CHECK(b2[0] == 0);
  CHECK(regularity_via_gin(V, 3) == 3);
  check_against_k_polynomial(V.ideal.hilbert(), V.ideal.nvars(), b1, b2);
  for (int p = 1; p <= 3; ++p) CHECK(betti_p1_via_quadrics(V, p) == b1[p]);
}

TEST_CASE("curves of maximal regularity") {
  PrimeField K;
  auto C = cmr_curve<PrimeField>(K, 5, 8, true, 7);
  CHECK(regularity_via_gin(C, 1) == 5);
  CHECK(regularity_via_gin(C, 2) == 5);
}

TEST_CASE("degenerate and trivial inputs") {
  PrimeField K;
  auto L = coordinate_line<PrimeField>(K, 3);
  CHECK_THROWS_AS(betti_strand_one(L), Error);
  auto P = projective_space<PrimeField>(K, 3);
  CHECK(regularity_via_gin(P, 1) == 0);
  CHECK(ell_from_strand({0, 3, 2}) == 2);
  CHECK(ell_from_strand({0, 3, 0}) == 1);
  CHECK(gl_index_from_strand({0, 0, 4}, false) == 1);
  CHECK(gl_index_from_strand({1, 0}, false) == StrandTable::kNone);
  CHECK(gl_index_from_strand({0, 0, 0}, true) == StrandTable::kInfinity);
}

TEST_CASE("extraction recovers the Veronese surface from a canonical-square curve") {
  PrimeField K;
  auto C = plane_curve_reembed(fermat_quartic(K), 2, {}, false);
  CHECK(C.r() == 5);
  CHECK(C.degree() == 8);
  auto Y = extract_syzygy_variety(C, 3);
  CHECK(Y.dim() == 2);
  CHECK(Y.degree() == 4);
  CHECK(C.ideal.contains(Y.ideal));
  CHECK_THROWS_AS(extract_syzygy_variety(rational_normal_curve<PrimeField>(K, 4), 1), Error);
}
