#include "qplab/simd/kernels.hpp"

namespace qplab::simd {

namespace {

void axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
  for (size_t i = 0; i < n; ++i) {
    uint64_t v = dst[i] + static_cast<uint64_t>(c) * src[i];
    dst[i] = static_cast<uint32_t>(v % p);
  }
}

void scale_scalar(uint32_t* v, uint32_t c, size_t n, uint32_t p) {
  for (size_t i = 0; i < n; ++i) v[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * v[i] % p);
}

size_t find_nonzero_scalar(const uint32_t* v, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (v[i]) return i;
  return n;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{axpy_scalar, scale_scalar, find_nonzero_scalar, "scalar"};
  return table;
}

}  // namespace qplab::simd
