#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "qplab/polynomial.hpp"

namespace qplab {

struct GbOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  /// Only pairs of (weighted) degree <= bound are processed; -1 means no bound.
  int degree_bound = -1;
  /// Grading used for pair selection and truncation; empty means standard.
  std::vector<int> weights;
};

struct GbStats {
  size_t pairs_considered = 0;
  size_t pairs_reduced = 0;
  size_t zero_reductions = 0;
};

/// Reduced Groebner basis, monic in `opts.order`, sorted ascending by leading
/// monomial. Deterministic for fixed input.
template <class F>
std::vector<Polynomial<F>> compute_groebner_basis(const std::vector<Polynomial<F>>& gens, const GbOptions& opts,
                                                  GbStats* stats = nullptr);

/// Full normal form of f modulo G (G need not be a Groebner basis).
template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G, const MonomialOrder& order);

struct HilbertData {
  /// Numerator Q(t) of HS(t) = Q(t) / (1 - t)^krull_dim, with Q(1) != 0.
  std::vector<int64_t> numerator;
  int krull_dim = 0;
  int dim = 0;           // projective dimension, -1 for an irrelevant ideal
  int64_t degree = 0;    // Q(1)
  int stabilization_degree = 0;
  std::vector<mpq_class> hp_coeffs;  // Hilbert polynomial, ascending powers of t

  int64_t hf(int t) const;
  mpq_class hp(int t) const;
};

/// Hilbert data of S / (monomials) in nvars variables.
HilbertData hilbert_from_monomials(const std::vector<Monomial>& gens, int nvars);

/// Process-wide counters for the Groebner caches.
struct CacheCounters {
  std::atomic<uint64_t> memory_hits{0};
  std::atomic<uint64_t> disk_hits{0};
  std::atomic<uint64_t> computed{0};
};
CacheCounters& cache_counters();

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(const std::string& data);

/// Homogeneous ideal (with respect to `weights`, standard grading if empty)
/// with cached Groebner bases and Hilbert data. Copies share the cache.
template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(F field, int nvars, std::vector<Poly> gens = {}, std::vector<int> weights = {});

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<int>& weights() const { return weights_; }
  bool is_zero() const { return gens_.empty(); }

  const std::vector<Poly>& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  /// Members of the reduced GB of degree <= bound; computed with truncation.
  std::vector<Poly> truncated_groebner_basis(const MonomialOrder& order, int bound) const;
  /// Records a known reduced GB (e.g. from an elimination) so it is not recomputed.
  void seed_groebner_basis(const MonomialOrder& order, std::vector<Poly> gb) const;

  const HilbertData& hilbert() const;

  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool operator==(const Ideal& o) const { return contains(o) && o.contains(*this); }

  /// Stable content hash of the normalized generators plus order and field.
  std::string cache_key(const MonomialOrder& order, int bound = -1) const;

 private:
  struct Cache {
    mutable std::shared_mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Poly>>> gbs;
    std::shared_ptr<const HilbertData> hilbert;
  };

  std::shared_ptr<const std::vector<Poly>> lookup(const std::string& key) const;
  std::shared_ptr<const std::vector<Poly>> store(const std::string& key, std::vector<Poly> gb) const;

  F field_;
  int nvars_;
  std::vector<Poly> gens_;
  std::vector<int> weights_;
  std::shared_ptr<Cache> cache_;
};

/// I ∩ K[x_k..x_r], returned in a ring of nvars - k variables.
template <class F>
Ideal<F> elimination_ideal(const Ideal<F>& I, int k);

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& J, const Polynomial<F>& f);

template <class F>
Ideal<F> saturate_by(const Ideal<F>& I, const Polynomial<F>& f);

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b);

/// Basis of the degree-t piece I_t in row-reduced form (grevlex-leading terms distinct).
template <class F>
std::vector<Polynomial<F>> graded_piece_basis(const Ideal<F>& I, int t);

/// dim I_t computed through the Hilbert function.
template <class F>
int64_t graded_piece_dim(const Ideal<F>& I, int t);

/// Minimal homogeneous generators, chosen greedily from the given generators
/// degree by degree.
template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I);

/// Number of minimal generators in degree t: dim I_t - dim (S_1 I_{t-1}).
template <class F>
int64_t minimal_generator_count(const Ideal<F>& I, int t);

/// Row-reduces a list of homogeneous polynomials of one degree to a basis.
template <class F>
std::vector<Polynomial<F>> span_basis(const std::vector<Polynomial<F>>& polys, int nvars, const F& field);

uint64_t binomial(int n, int k);

}  // namespace qplab
