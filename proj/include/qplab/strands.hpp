#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "qplab/variety.hpp"

namespace qplab {

/// Size-p subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<int>> wedge_basis(int n, int p);
/// Position of a sorted subset in wedge_basis(n, |subset|).
size_t wedge_rank(const std::vector<int>& subset);

struct StrandTable {
  static constexpr int kInfinity = INT_MAX;
  static constexpr int kNone = -1;

  std::vector<int64_t> b1;  // b1[p] = beta_{p,1}, index 0 unused
  std::vector<int64_t> b2;  // b2[i] = beta_{i,2}, i = 0..bound
  int ell = 0;
  int gl_index = kNone;
  int bound = 0;
  bool bound_clipped = false;

  std::string gl_index_string() const;
};

/// beta_{p,1} for p = 1..c. Throws nondegeneracy when I_1 != 0.
template <class F>
std::vector<int64_t> betti_strand_one(const Variety<F>& V);

/// beta_{p,1} as the kernel dimension of wedge^{p-1} V ⊗ I_2 -> wedge^{p-2} V ⊗ S_3.
template <class F>
int64_t betti_p1_via_quadrics(const Variety<F>& V, int p);

/// beta_{i,2} for i = 0..bound (bound clipped to c + 1).
template <class F>
std::vector<int64_t> betti_strand_two(const Variety<F>& V, int bound, bool* clipped = nullptr);

/// Max generator degree of the generic initial ideal; 0 for the zero ideal.
template <class F>
int regularity_via_gin(const Variety<F>& V, uint64_t seed);

int ell_from_strand(const std::vector<int64_t>& b1);
/// a(X) from b2 and whether reg <= 2 certifies vanishing past the bound.
int gl_index_from_strand(const std::vector<int64_t>& b2, bool two_regular);

template <class F>
StrandTable strand_table(const Variety<F>& V, uint64_t seed, int bound = -1);

/// Variety of minimal degree cut out by the coefficient quadrics of a class
/// in the top nonzero piece of the quadratic strand.
template <class F>
Variety<F> extract_syzygy_variety(const Variety<F>& V, uint64_t seed);

}  // namespace qplab
