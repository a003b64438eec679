#pragma once

#include <cstdint>
#include <random>

namespace qplab {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Child seed for sub-computation `stream` of a run seeded with `seed`.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) { return splitmix64(seed ^ splitmix64(stream + 0x51ed27)); }

/// Seeded 64-bit generator. Field elements are drawn through F::from_random
/// so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {}
  uint64_t next() { return engine_(); }
  template <class F>
  typename F::Elem element(const F& field) {
    return field.from_random(next());
  }
  /// Uniform-ish integer in [lo, hi].
  int64_t between(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qplab
