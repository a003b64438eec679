#include <cstdlib>
#include <string_view>

#include "qplab/simd/kernels.hpp"

namespace qplab::simd {

#ifndef QPLAB_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

namespace {

const KernelTable& choose() {
  const char* env = std::getenv("QPLAB_SIMD");
  if (env && std::string_view(env) == "scalar") return scalar_kernels();
#if defined(__x86_64__) || defined(__i386__)
  if (const KernelTable* t = avx2_kernels(); t && __builtin_cpu_supports("avx2")) return *t;
#endif
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = choose();
  return table;
}

}  // namespace qplab::simd
