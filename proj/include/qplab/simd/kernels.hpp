#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qplab::simd {

/// Row kernels for elimination over Z/pZ. Inputs are canonical residues.
struct KernelTable {
  /// dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy_mod)(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p);
  /// v[i] = c * v[i] mod p
  void (*scale_mod)(uint32_t* v, uint32_t c, size_t n, uint32_t p);
  /// First index i >= 0 with v[i] != 0, or n.
  size_t (*find_nonzero)(const uint32_t* v, size_t n);
  std::string_view name;
};

const KernelTable& scalar_kernels();
/// nullptr when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();

/// Kernels chosen at startup: AVX2 when the CPU supports it, unless
/// QPLAB_SIMD=scalar is set in the environment.
const KernelTable& active_kernels();

/// Largest modulus the vector kernels handle; larger moduli use scalar code.
inline constexpr uint32_t kVectorModulusLimit = 46340;

}  // namespace qplab::simd
