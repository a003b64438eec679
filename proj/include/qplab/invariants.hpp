#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplab/strands.hpp"
#include "qplab/variety.hpp"

namespace qplab {

/// dim I(V)_2.
template <class F>
int64_t quadric_count(const Variety<F>& V);

/// dim I(pi_Gamma V)_2 for points of V, computed as the quadrics of I_2 whose
/// gradients vanish at every point of Gamma.
template <class F>
int64_t quadrics_after_projection(const Variety<F>& V, const std::vector<std::vector<typename F::Elem>>& pts);

template <class F>
struct QpLevel {
  int k = 0;
  std::vector<int64_t> dims;  // one per sampled tuple
  std::vector<uint64_t> seeds;
  int64_t min_dim = 0;
};

template <class F>
struct QpCertificate {
  int value = 0;
  /// Tuple of `value` points realizing dim I(pi_Gamma V)_2 = 0.
  std::vector<std::vector<typename F::Elem>> witness;
  /// Minimum dim I_2 after k projections for k = 0..value; all but the last are > 0.
  std::vector<int64_t> floor_evidence;
  std::vector<QpLevel<F>> levels;
  uint64_t seed = 0;
  int samples_per_level = 0;
  /// Some level saw different dimensions across tuples (a nongeneric draw).
  bool flagged = false;
};

template <class F>
QpCertificate<F> quadratic_persistence(const Variety<F>& V, int samples, uint64_t seed);

struct PyBounds {
  int lower = 0;
  std::optional<int> upper;
  std::string lower_source = "r + 1 - qp";
  std::string upper_source;
  bool totally_real = false;
  bool collapsed() const { return upper && *upper == lower; }
};

template <class F>
PyBounds py_bounds(const Variety<F>& V, int qp, const Variety<F>* container = nullptr);

/// One consistency assertion of the classification results.
struct Assertion {
  std::string name;
  bool applies = false;
  bool holds = true;
  std::string detail;
};

struct Verdicts {
  int n = 0, c = 0, r = 0;
  int64_t d = 0, dim_i2 = 0;
  bool is_minimal_degree = false;
  bool is_d_c2 = false;
  bool castelnuovo_divisor = false;
  bool strand_divisor = false;
  std::vector<Assertion> assertions;
  bool all_hold() const;
};

/// Degree-based verdicts. With a strand table and a qp value the consistency
/// assertions between qp, ell, beta_{2,1} and the degree are attached.
template <class F>
Verdicts classify(const Variety<F>& V, const StrandTable* strands = nullptr, std::optional<int> qp = std::nullopt);

}  // namespace qplab
