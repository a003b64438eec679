#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qplab/linalg.hpp"
#include "qplab/variety.hpp"

namespace qplab {

/// Invertible matrix whose first k columns are the given points; the rest are
/// standard basis vectors at the non-pivot columns of the RREF of the points.
/// Throws a rank error when the points are dependent.
template <class F>
DenseMatrix<F> completion_matrix(const F& field, int nvars, const std::vector<std::vector<typename F::Elem>>& pts);

/// Linear projection of V from points lying on it. `real_points` marks the
/// points as real, which keeps the totally-real flag.
template <class F>
Variety<F> project_from_points(const Variety<F>& V, const std::vector<std::vector<typename F::Elem>>& pts,
                               bool real_points = true);

template <class F>
struct PEIResult {
  std::vector<typename F::Elem> center;
  /// K_0, ..., K_m in the r variables x_1..x_r of the changed coordinates.
  std::vector<Ideal<F>> ideals;
  /// (i, t) -> dim (K_i)_t for t = 0..max_degree.
  std::map<std::pair<int, int>, int64_t> dims_deg;
  int max_degree = 0;
};

/// Partial elimination ideals K_0..K_m at q, with degree pieces up to max_degree.
template <class F>
PEIResult<F> partial_elimination_ideals(const Variety<F>& V, const std::vector<typename F::Elem>& q, int m,
                                        int max_degree = 3);

struct PeiIdentity {
  int64_t dim_i2 = 0;
  int64_t dim_projection_i2 = 0;
  int64_t dim_k1_1 = 0;
  bool holds = false;
  std::string to_string() const;
};

/// dim I_2 = dim I(X_q)_2 + dim (K_1)_1 at q.
template <class F>
PeiIdentity pei_dimension_identity_check(const Variety<F>& V, const std::vector<typename F::Elem>& q);

}  // namespace qplab
