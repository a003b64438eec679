#include "qplab/invariants.hpp"

#include <algorithm>

#include "qplab/linalg.hpp"

namespace qplab {

template <class F>
int64_t quadric_count(const Variety<F>& V) {
  return V.ideal.is_zero() ? 0 : graded_piece_dim(V.ideal, 2);
}

namespace {

template <class F>
struct GradientMap {
  std::vector<Polynomial<F>> quads;
  std::vector<std::vector<Polynomial<F>>> grads;  // grads[q][i] = d quads[q] / d x_i

  explicit GradientMap(const Variety<F>& V) {
    if (!V.ideal.is_zero()) quads = graded_piece_basis(V.ideal, 2);
    for (const auto& q : quads) {
      std::vector<Polynomial<F>> g;
      for (int i = 0; i < V.ideal.nvars(); ++i) g.push_back(q.derivative(i));
      grads.push_back(std::move(g));
    }
  }

  int64_t surviving(const F& K, int nv, const std::vector<std::vector<typename F::Elem>>& pts) const {
    if (quads.empty()) return 0;
    if (pts.empty()) return static_cast<int64_t>(quads.size());
    DenseMatrix<F> m(K, pts.size() * nv, quads.size());
    for (size_t j = 0; j < pts.size(); ++j)
      for (size_t q = 0; q < quads.size(); ++q)
        for (int i = 0; i < nv; ++i) m.at(j * nv + i, q) = grads[q][i].evaluate(pts[j]);
    return static_cast<int64_t>(quads.size()) - static_cast<int64_t>(rank(std::move(m)));
  }
};

template <class F>
size_t point_rank(const F& K, int nv, const std::vector<std::vector<typename F::Elem>>& pts) {
  DenseMatrix<F> m(K, 0, nv);
  for (const auto& p : pts) m.append_row(p);
  return rank(std::move(m));
}

}  // namespace

template <class F>
int64_t quadrics_after_projection(const Variety<F>& V, const std::vector<std::vector<typename F::Elem>>& pts) {
  for (const auto& p : pts)
    if (!point_on(V.ideal, p)) throw Error(ErrorKind::membership, "point does not lie on " + V.name);
  const int nv = V.ideal.nvars();
  if (point_rank(V.field(), nv, pts) < pts.size())
    throw Error(ErrorKind::rank, "the projection points are linearly dependent");
  return GradientMap<F>(V).surviving(V.field(), nv, pts);
}

template <class F>
QpCertificate<F> quadratic_persistence(const Variety<F>& V, int samples, uint64_t seed) {
  if (samples < 1) throw Error(ErrorKind::domain, "need at least one sample per level");
  for (const auto& g : V.ideal.generators())
    if (g.degree() == 1) throw Error(ErrorKind::nondegeneracy, "the variety lies in a hyperplane");
  const F& K = V.field();
  const int nv = V.ideal.nvars();
  GradientMap<F> gm(V);
  QpCertificate<F> cert;
  cert.seed = seed;
  cert.samples_per_level = samples;
  constexpr int kDrawAttempts = 20;

  for (int k = 0; k <= nv; ++k) {
    QpLevel<F> level;
    level.k = k;
    std::vector<std::vector<typename F::Elem>> best;
    for (int s = 0; s < (k == 0 ? 1 : samples); ++s) {
      const uint64_t tuple_seed = derive_seed(seed, (static_cast<uint64_t>(k) << 16) | static_cast<uint64_t>(s));
      std::vector<std::vector<typename F::Elem>> pts;
      int draws = 0;
      while (static_cast<int>(pts.size()) < k) {
        if (++draws > k + kDrawAttempts)
          throw Error(ErrorKind::sampling_failure, "could not draw " + std::to_string(k) + " independent points");
        pts.push_back(sample_point(V, derive_seed(tuple_seed, draws)));
        if (point_rank(K, nv, pts) < pts.size()) pts.pop_back();
      }
      int64_t dim = gm.surviving(K, nv, pts);
      level.dims.push_back(dim);
      level.seeds.push_back(tuple_seed);
      if (s == 0 || dim < level.min_dim) {
        level.min_dim = dim;
        best = pts;
      }
    }
    if (std::adjacent_find(level.dims.begin(), level.dims.end(), std::not_equal_to<>()) != level.dims.end())
      cert.flagged = true;
    cert.floor_evidence.push_back(level.min_dim);
    cert.levels.push_back(level);
    if (level.min_dim == 0) {
      cert.value = k;
      cert.witness = std::move(best);
      return cert;
    }
  }
  throw Error(ErrorKind::sampling_failure, "quadrics survive projection from every sampled tuple");
}

template <class F>
PyBounds py_bounds(const Variety<F>& V, int qp, const Variety<F>* container) {
  if (!V.totally_real) throw Error(ErrorKind::totally_real_required, V.name + " is not flagged totally real");
  PyBounds b;
  b.totally_real = true;
  b.lower = V.r() + 1 - qp;
  if (container) {
    const auto& Y = *container;
    if (!Y.totally_real) throw Error(ErrorKind::bad_container, "container is not flagged totally real");
    if (Y.ideal.nvars() != V.ideal.nvars() || !(Y.field() == V.field()))
      throw Error(ErrorKind::bad_container, "container lives in a different ambient space");
    if (Y.degree() != Y.codim() + 1) throw Error(ErrorKind::bad_container, "container is not of minimal degree");
    if (!V.ideal.contains(Y.ideal)) throw Error(ErrorKind::bad_container, "container does not contain the variety");
    b.upper = Y.dim() + 1;
    b.upper_source = "dim + 1 of the container " + Y.name;
  } else {
    b.upper = V.r() + 1;
    b.upper_source = "ambient P^" + std::to_string(V.r());
  }
  return b;
}

bool Verdicts::all_hold() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return !a.applies || a.holds; });
}

template <class F>
Verdicts classify(const Variety<F>& V, const StrandTable* strands, std::optional<int> qp) {
  Verdicts v;
  v.r = V.r();
  v.n = V.dim();
  v.c = V.codim();
  v.d = V.degree();
  v.dim_i2 = quadric_count(V);
  const int c = v.c;
  const int64_t d = v.d;
  v.is_minimal_degree = d == c + 1;
  v.is_d_c2 = d == c + 2;
  v.castelnuovo_divisor = c >= 1 && d >= 2 * c + 3 && v.dim_i2 == static_cast<int64_t>(binomial(c, 2));
  auto b1 = [&](int p) -> int64_t {
    if (!strands || p < 1 || p >= static_cast<int>(strands->b1.size())) return 0;
    return strands->b1[p];
  };
  v.strand_divisor = strands && c >= 2 && d >= c + 3 && b1(c - 1) != 0;
  if (!qp) return v;
  const int q = *qp;
  auto add = [&](std::string name, bool applies, bool holds, std::string detail) {
    v.assertions.push_back({std::move(name), applies, holds, std::move(detail)});
  };
  add("qp <= c", true, q <= c, "qp=" + std::to_string(q) + " c=" + std::to_string(c));
  add("qp = c iff minimal degree", true, (q == c) == v.is_minimal_degree,
      "qp=" + std::to_string(q) + " d=" + std::to_string(d));
  add("castelnuovo quadric bound", c >= 1 && d >= 2 * c + 1, v.dim_i2 <= static_cast<int64_t>(binomial(c, 2)),
      "dim I2=" + std::to_string(v.dim_i2) + " bound=" + std::to_string(binomial(c, 2)));
  add("d = c + 2 gives qp = c - 1", c >= 3 && v.is_d_c2, q == c - 1, "qp=" + std::to_string(q));
  if (strands) {
    const int ell = strands->ell;
    add("qp >= ell", true, q >= ell, "qp=" + std::to_string(q) + " ell=" + std::to_string(ell));
    add("ell = qp in codimension 3", c == 3 && d >= 6, ell == q,
        "qp=" + std::to_string(q) + " ell=" + std::to_string(ell));
    add("beta_21 > 0 iff qp >= 2", c >= 3, (b1(2) > 0) == (q >= 2),
        "beta_21=" + std::to_string(b1(2)) + " qp=" + std::to_string(q));
    add("castelnuovo count gives a minimal-degree divisor", v.castelnuovo_divisor, v.strand_divisor && q == c - 1,
        "qp=" + std::to_string(q) + " beta_c-1,1=" + std::to_string(b1(c - 1)));
    const bool general = (c == 3 && d >= 6) || (c >= 4 && d >= 2 * c + 3);
    add("qp = c - 1 iff divisor of a minimal-degree variety", general, (q == c - 1) == v.strand_divisor,
        "qp=" + std::to_string(q) + " divisor=" + (v.strand_divisor ? "yes" : "no"));
  }
  return v;
}

#define QPLAB_INSTANTIATE(F)                                                                                 \
  template int64_t quadric_count(const Variety<F>&);                                                         \
  template int64_t quadrics_after_projection(const Variety<F>&, const std::vector<std::vector<F::Elem>>&);   \
  template QpCertificate<F> quadratic_persistence(const Variety<F>&, int, uint64_t);                         \
  template PyBounds py_bounds(const Variety<F>&, int, const Variety<F>*);                                    \
  template Verdicts classify(const Variety<F>&, const StrandTable*, std::optional<int>);

QPLAB_INSTANTIATE(PrimeField)
QPLAB_INSTANTIATE(RationalField)

}  // namespace qplab
