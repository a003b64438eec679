#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "qplab/linalg.hpp"
#include "qplab/rng.hpp"
#include "qplab/simd/kernels.hpp"
#include "qplab/univariate.hpp"

using namespace qplab;
using namespace qplab::test;

namespace {

std::vector<uint32_t> random_row(Rng& rng, size_t n, uint32_t p, int zero_every = 0) {
  std::vector<uint32_t> v(n);
  for (auto& x : v) x = (zero_every && rng.next() % zero_every) ? 0 : static_cast<uint32_t>(rng.next() % p);
  return v;
}

}  // namespace

TEST_CASE("vector kernels agree with the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  const auto* vec = simd::avx2_kernels();
  if (!vec) {
    MESSAGE("built without AVX2 kernels");
    return;
  }
  Rng rng(17);
  for (uint32_t p : {3u, 32003u, 30011u, simd::kVectorModulusLimit - 1}) {
    // odd lengths exercise the scalar tails
    for (size_t n : {0u, 1u, 7u, 8u, 9u, 33u, 257u}) {
      auto a = random_row(rng, n, p), b = random_row(rng, n, p);
      uint32_t c = static_cast<uint32_t>(rng.next() % p);
      auto a1 = a, a2 = a;
      ref.axpy_mod(a1.data(), b.data(), c, n, p);
      vec->axpy_mod(a2.data(), b.data(), c, n, p);
      CHECK(a1 == a2);
      ref.scale_mod(a1.data(), c, n, p);
      vec->scale_mod(a2.data(), c, n, p);
      CHECK(a1 == a2);
      for (uint32_t x : a1) CHECK(x < p);
      auto z = random_row(rng, n, p, 40);
      CHECK(ref.find_nonzero(z.data(), n) == vec->find_nonzero(z.data(), n));
      std::vector<uint32_t> zeros(n, 0);
      CHECK(vec->find_nonzero(zeros.data(), n) == n);
    }
  }
  CHECK(!simd::active_kernels().name.empty());
}

TEST_CASE("sparse rank matches dense rank") {
  PrimeField K;
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    size_t rows = 5 + rng.next() % 60, cols = 5 + rng.next() % 60;
    DenseMatrix<PrimeField> dense(K, 0, cols);
    std::vector<SparseRow<PrimeField>> sparse;
    size_t base_rows = rows / 2 + 1;
    std::vector<std::vector<uint32_t>> base;
    for (size_t i = 0; i < rows; ++i) {
      std::vector<uint32_t> row;
      if (i < base_rows) {
        row = random_row(rng, cols, K.characteristic(), 4);
        base.push_back(row);
      } else {
        // dependent rows: combinations of two earlier rows
        const auto& u = base[rng.next() % base.size()];
        const auto& v = base[rng.next() % base.size()];
        uint32_t c = rng.element(K);
        row.resize(cols);
        for (size_t j = 0; j < cols; ++j) row[j] = K.add(u[j], K.mul(c, v[j]));
      }
      dense.append_row(row);
      SparseRow<PrimeField> sr;
      for (size_t j = 0; j < cols; ++j)
        if (row[j]) {
          sr.cols.push_back(static_cast<uint32_t>(j));
          sr.vals.push_back(row[j]);
        }
      sparse.push_back(sr);
    }
    CHECK(sparse_rank(K, sparse, cols) == rank(dense));
  }
}

TEST_CASE_TEMPLATE("rref, kernel and inverse", F, PrimeField, RationalField) {
  F K;
  DenseMatrix<F> m(K, 0, 3);
  m.append_row({K.from_int(1), K.from_int(2), K.from_int(3)});
  m.append_row({K.from_int(2), K.from_int(4), K.from_int(6)});
  m.append_row({K.from_int(0), K.from_int(1), K.from_int(1)});
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  auto image = m.apply(ker[0]);
  for (const auto& x : image) CHECK(K.is_zero(x));
  CHECK_THROWS_AS(inverse(m), Error);

  DenseMatrix<F> a(K, 0, 3);
  a.append_row({K.from_int(2), K.from_int(1), K.from_int(0)});
  a.append_row({K.from_int(0), K.from_int(1), K.from_int(5)});
  a.append_row({K.from_int(1), K.from_int(0), K.from_int(3)});
  CHECK(a * inverse(a) == DenseMatrix<F>::identity(K, 3));
  CHECK(inverse(a) * a == DenseMatrix<F>::identity(K, 3));
  auto rr = rref(a);
  CHECK(rr.pivots == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("univariate roots over a prime field") {
  PrimeField K;
  Rng rng(4);
  // (x - 3)(x - 10)(x - 10)(x^2 + 1) has roots 3, 10 and the square roots of -1
  UPoly f = {K.one()};
  for (uint32_t r : {3u, 10u, 10u}) f = upoly_mul(K, f, {K.neg(r), 1});
  f = upoly_mul(K, f, {1, 0, 1});
  auto roots = upoly_roots(K, f, rng);
  std::vector<uint32_t> expected = {3, 10};
  // 32003 = 3 mod 4, so x^2 + 1 has no roots
  CHECK(roots == expected);
  for (uint32_t r : roots) CHECK(upoly_eval(K, f, r) == 0u);
  PrimeField K2(30013);  // 1 mod 4
  UPoly g = {1, 0, 1};
  auto r2 = upoly_roots(K2, g, rng);
  REQUIRE(r2.size() == 2);
  for (uint32_t r : r2) CHECK(upoly_eval(K2, g, r) == 0u);
  CHECK(upoly_gcd(K, upoly_mul(K, {1, 1}, {2, 1}), upoly_mul(K, {1, 1}, {5, 1})) == UPoly{1, 1});
  CHECK(upoly_mod(K, {0, 0, 1}, {1, 1}) == UPoly{1});
}
