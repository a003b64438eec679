#include <immintrin.h>

#include "qplab/simd/kernels.hpp"

namespace qplab::simd {

namespace {

// c * x mod p for lanes with c, x < p <= 46340, so c * x < 2^31. The float
// quotient estimate is off by at most one, fixed by the two conditional steps.
inline __m256i mulmod(__m256i x, __m256i c, __m256i pv, __m256 pinv) {
  __m256i prod = _mm256_mullo_epi32(x, c);
  __m256 q = _mm256_mul_ps(_mm256_cvtepi32_ps(prod), pinv);
  __m256i qi = _mm256_cvttps_epi32(q);
  __m256i r = _mm256_sub_epi32(prod, _mm256_mullo_epi32(qi, pv));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, pv));
  __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(pv, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(big, pv));
}

inline __m256i addmod(__m256i a, __m256i b, __m256i pv) {
  __m256i s = _mm256_add_epi32(a, b);
  __m256i big = _mm256_cmpgt_epi32(s, _mm256_sub_epi32(pv, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(s, _mm256_and_si256(big, pv));
}

void axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
  if (p > kVectorModulusLimit) return scalar_kernels().axpy_mod(dst, src, c, n, p);
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 pinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    d = addmod(d, mulmod(s, cv, pv, pinv), pv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  if (i < n) scalar_kernels().axpy_mod(dst + i, src + i, c, n - i, p);
}

void scale_avx2(uint32_t* v, uint32_t c, size_t n, uint32_t p) {
  if (p > kVectorModulusLimit) return scalar_kernels().scale_mod(v, c, n, p);
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 pinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), mulmod(x, cv, pv, pinv));
  }
  if (i < n) scalar_kernels().scale_mod(v + i, c, n - i, p);
}

size_t find_nonzero_avx2(const uint32_t* v, size_t n) {
  size_t i = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero)));
    if (mask != 0xff) return i + static_cast<size_t>(__builtin_ctz(~mask & 0xff));
  }
  for (; i < n; ++i)
    if (v[i]) return i;
  return n;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{axpy_avx2, scale_avx2, find_nonzero_avx2, "avx2"};
  return &table;
}

}  // namespace qplab::simd
