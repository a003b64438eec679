#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplab/groebner.hpp"
#include "qplab/rng.hpp"

namespace qplab {

/// Homogeneous map from the source (P^s, or the subvariety cut out by
/// `source_ideal`) given by components of one common degree.
template <class F>
struct RationalMap {
  int source_nvars = 0;
  std::vector<Polynomial<F>> components;
  std::vector<Polynomial<F>> source_ideal;
  /// All coefficients came from Q (so real centers/points keep real loci dense).
  bool rational = true;

  int target_nvars() const { return static_cast<int>(components.size()); }
  int degree() const;
  std::vector<typename F::Elem> evaluate(const std::vector<typename F::Elem>& src) const;
};

template <class F>
struct Variety {
  Ideal<F> ideal;
  std::optional<RationalMap<F>> param;
  bool totally_real = false;
  std::string name;

  int r() const { return ideal.nvars() - 1; }
  int dim() const { return ideal.hilbert().dim; }
  int64_t degree() const { return ideal.hilbert().degree; }
  int codim() const { return r() - dim(); }
  const F& field() const { return ideal.field(); }
};

using Point = std::vector<uint32_t>;

template <class F>
bool point_on(const Ideal<F>& I, const std::vector<typename F::Elem>& pt);

/// The whole projective space P^r (zero ideal, identity parameterization).
template <class F>
Variety<F> projective_space(const F& field, int r);

template <class F>
Variety<F> image_of_map(const Variety<F>& source, const RationalMap<F>& phi);

template <class F>
Variety<F> rational_normal_curve(const F& field, int dd);

/// Rational normal scroll S(a_1, ..., a_k); zero entries give cones.
template <class F>
Variety<F> scroll(const F& field, const std::vector<int>& a);

template <class F>
Variety<F> veronese(const F& field, int n, int dd);

/// Smooth quadric x0*x1 - x2^2 - ... - x_r^2 in P^r.
template <class F>
Variety<F> quadric(const F& field, int r);

/// Quintic del Pezzo surface in P^5 together with the scroll S(1,1,1)
/// containing it, in matching coordinates.
template <class F>
std::pair<Variety<F>, Variety<F>> del_pezzo_quintic(const F& field);

/// Curve of maximal regularity of degree dd in P^r.
template <class F>
Variety<F> cmr_curve(const F& field, int r, int dd, bool on_scroll, uint64_t seed);

/// Line {x2 = ... = x_r = 0} in P^r.
template <class F>
Variety<F> coordinate_line(const F& field, int r);

/// Plane curve {f = 0} re-embedded by degree-k forms through `pts`.
template <class F>
Variety<F> plane_curve_reembed(const Polynomial<F>& f, int k, const std::vector<std::vector<typename F::Elem>>& pts,
                               bool rational_points);

template <class F>
Polynomial<F> fermat_quartic(const F& field);

/// The four rational points [±1:0:1], [0:±1:1] of x^4 + y^4 - z^4.
template <class F>
std::vector<std::vector<typename F::Elem>> fermat_rational_points(const F& field);

/// Random points on a variety found by slicing (prime fields only).
std::vector<uint32_t> find_point_by_slicing(const Ideal<PrimeField>& I, Rng& rng);

template <class F>
std::vector<typename F::Elem> sample_point(const Variety<F>& V, uint64_t seed);

/// Length of the scheme V ∩ L.
template <class F>
int64_t secant_order(const Variety<F>& V, const Variety<F>& L);

/// Reduced monic generators listed one per line (for reports and files).
template <class F>
std::vector<std::string> ideal_lines(const Ideal<F>& I);

}  // namespace qplab
