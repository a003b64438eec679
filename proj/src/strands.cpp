#include "qplab/strands.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "qplab/linalg.hpp"

namespace qplab {

std::vector<std::vector<int>> wedge_basis(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // next subset in colex order
    int i = 0;
    while (i < p && ((i + 1 < p && cur[i] + 1 == cur[i + 1]) || (i + 1 == p && cur[i] + 1 == n))) ++i;
    if (i == p) break;
    ++cur[i];
    for (int j = 0; j < i; ++j) cur[j] = j;
  }
  return out;
}

size_t wedge_rank(const std::vector<int>& subset) {
  size_t r = 0;
  for (size_t j = 0; j < subset.size(); ++j) r += binomial(subset[j], static_cast<int>(j) + 1);
  return r;
}

std::string StrandTable::gl_index_string() const {
  if (gl_index == kInfinity) return "inf";
  if (gl_index == kNone) return "none";
  return std::to_string(gl_index);
}

namespace {

// Normal forms of degree-t monomials in terms of the standard monomials of S_X.
template <class F>
struct GradedNormalForms {
  using Elem = typename F::Elem;
  std::vector<Monomial> standard;
  std::unordered_map<Monomial, size_t, MonomialHash> index;
  std::unordered_map<Monomial, std::vector<std::pair<size_t, Elem>>, MonomialHash> nf;
};

template <class F>
GradedNormalForms<F> normal_forms(const Ideal<F>& I, int t, const std::vector<Polynomial<F>>& gb) {
  GradedNormalForms<F> out;
  const F& K = I.field();
  const int n = I.nvars();
  for (const auto& m : monomials_of_degree(n, t)) {
    bool standard = true;
    for (const auto& g : gb)
      if (g.leading_term().mono.divides(m)) {
        standard = false;
        break;
      }
    if (standard) {
      out.index[m] = out.standard.size();
      out.standard.push_back(m);
    }
  }
  for (const auto& m : monomials_of_degree(n, t)) {
    std::vector<std::pair<size_t, typename F::Elem>> vec;
    auto it = out.index.find(m);
    if (it != out.index.end()) {
      vec.push_back({it->second, K.one()});
    } else {
      auto r = reduce(Polynomial<F>::monomial(K, n, m, K.one()), gb, MonomialOrder::grevlex());
      for (const auto& term : r.terms()) vec.push_back({out.index.at(term.mono), term.coef});
    }
    out.nf[m] = std::move(vec);
  }
  return out;
}

template <class F>
struct KoszulContext {
  const Variety<F>& V;
  int nv;
  std::vector<Polynomial<F>> gb;  // grevlex GB up to degree 3
  std::vector<GradedNormalForms<F>> nf;  // index t = 0..3

  explicit KoszulContext(const Variety<F>& v) : V(v), nv(v.ideal.nvars()) {
    gb = V.ideal.is_zero() ? std::vector<Polynomial<F>>{}
                           : V.ideal.truncated_groebner_basis(MonomialOrder::grevlex(), 3);
    for (int t = 0; t <= 3; ++t) nf.push_back(normal_forms(V.ideal, t, gb));
  }

  size_t dim_sx(int t) const { return nf[t].standard.size(); }

  // rank of wedge^p V ⊗ (S_X)_t -> wedge^{p-1} V ⊗ (S_X)_{t+1}
  size_t rank(int p, int t) const {
    if (p <= 0) return 0;
    const F& K = V.field();
    const auto& src = nf[t].standard;
    const auto& dst = nf[t + 1];
    const size_t width = dst.standard.size();
    auto wedges = wedge_basis(nv, p);
    std::vector<SparseRow<F>> rows;
    rows.reserve(wedges.size() * src.size());
    std::map<uint32_t, typename F::Elem> acc;
    std::vector<int> face(p - 1);
    for (const auto& J : wedges) {
      for (const auto& m : src) {
        acc.clear();
        for (int j = 0; j < p; ++j) {
          for (int k = 0, o = 0; k < p; ++k)
            if (k != j) face[o++] = J[k];
          const size_t base = wedge_rank(face) * width;
          Monomial prod = m * Monomial::variable(J[j]);
          for (const auto& [idx, c] : dst.nf.at(prod)) {
            auto v = (j % 2) ? K.neg(c) : c;
            auto [it, fresh] = acc.try_emplace(static_cast<uint32_t>(base + idx), v);
            if (!fresh) it->second = K.add(it->second, v);
          }
        }
        SparseRow<F> row;
        for (const auto& [col, v] : acc)
          if (!K.is_zero(v)) {
            row.cols.push_back(col);
            row.vals.push_back(v);
          }
        rows.push_back(std::move(row));
      }
    }
    return sparse_rank(K, std::move(rows), binomial(nv, p - 1) * width);
  }
};

template <class F>
void require_nondegenerate(const Variety<F>& V) {
  for (const auto& g : V.ideal.generators())
    if (g.degree() == 1) throw Error(ErrorKind::nondegeneracy, "the variety lies in a hyperplane");
  if (!V.ideal.is_zero() && V.ideal.is_unit()) throw Error(ErrorKind::empty_variety, "unit ideal");
}

}  // namespace

template <class F>
std::vector<int64_t> betti_strand_one(const Variety<F>& V) {
  require_nondegenerate(V);
  const int c = V.codim();
  std::vector<int64_t> b1(c + 1, 0);
  if (V.ideal.is_zero()) return b1;
  KoszulContext<F> ctx(V);
  const int nv = ctx.nv;
  for (int p = 1; p <= c; ++p) {
    int64_t domain = static_cast<int64_t>(binomial(nv, p)) * nv;
    int64_t kernel = domain - static_cast<int64_t>(ctx.rank(p, 1));
    b1[p] = kernel - static_cast<int64_t>(binomial(nv, p + 1));
  }
  return b1;
}

namespace {

// Matrix of wedge^{p-1} V ⊗ I_2 -> wedge^{p-2} V ⊗ S_3, one column per domain basis element.
template <class F>
DenseMatrix<F> quadric_koszul_matrix(const F& K, int nv, const std::vector<Polynomial<F>>& quads, int p) {
  auto wedges = wedge_basis(nv, p - 1);
  auto cubics = monomials_of_degree(nv, 3);
  std::unordered_map<Monomial, size_t, MonomialHash> cidx;
  for (size_t i = 0; i < cubics.size(); ++i) cidx[cubics[i]] = i;
  const size_t rows = (p >= 2 ? binomial(nv, p - 2) : 0) * cubics.size();
  DenseMatrix<F> m(K, rows, wedges.size() * quads.size());
  if (p < 2) return m;
  std::vector<int> face(p - 2);
  size_t col = 0;
  for (const auto& J : wedges) {
    for (const auto& q : quads) {
      for (int j = 0; j < p - 1; ++j) {
        for (int k = 0, o = 0; k < p - 1; ++k)
          if (k != j) face[o++] = J[k];
        const size_t base = wedge_rank(face) * cubics.size();
        for (const auto& t : q.terms()) {
          auto v = (j % 2) ? K.neg(t.coef) : t.coef;
          auto& cell = m.at(base + cidx.at(t.mono * Monomial::variable(J[j])), col);
          cell = K.add(cell, v);
        }
      }
      ++col;
    }
  }
  return m;
}

}  // namespace

template <class F>
int64_t betti_p1_via_quadrics(const Variety<F>& V, int p) {
  require_nondegenerate(V);
  auto quads = graded_piece_basis(V.ideal, 2);
  if (p == 1) return static_cast<int64_t>(quads.size());
  auto m = quadric_koszul_matrix(V.field(), V.ideal.nvars(), quads, p);
  return static_cast<int64_t>(m.cols()) - static_cast<int64_t>(rank(std::move(m)));
}

template <class F>
std::vector<int64_t> betti_strand_two(const Variety<F>& V, int bound, bool* clipped) {
  require_nondegenerate(V);
  const int c = V.codim();
  if (clipped) *clipped = false;
  if (bound < 0 || bound > c + 1) {
    if (clipped) *clipped = bound > c + 1;
    bound = c + 1;
  }
  std::vector<int64_t> b2(bound + 1, 0);
  if (V.ideal.is_zero()) return b2;
  KoszulContext<F> ctx(V);
  const int nv = ctx.nv;
  for (int i = 0; i <= bound; ++i) {
    int64_t chains = static_cast<int64_t>(binomial(nv, i) * ctx.dim_sx(2));
    int64_t in = static_cast<int64_t>(ctx.rank(i + 1, 1));
    int64_t out = static_cast<int64_t>(ctx.rank(i, 2));
    b2[i] = chains - in - out;
  }
  return b2;
}

template <class F>
int regularity_via_gin(const Variety<F>& V, uint64_t seed) {
  if (V.ideal.is_zero()) return 0;
  const F& K = V.field();
  const int nv = V.ideal.nvars();
  auto one_gin = [&](uint64_t s) -> std::optional<int> {
    Rng rng(s);
    std::vector<std::vector<typename F::Elem>> M(nv, std::vector<typename F::Elem>(nv));
    for (auto& row : M)
      for (auto& v : row) v = rng.element(K);
    std::vector<Polynomial<F>> gens;
    try {
      for (const auto& g : V.ideal.generators()) gens.push_back(linear_substitution(g, M));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::invalid_coordinate_change) return std::nullopt;
      throw;
    }
    auto gb = compute_groebner_basis(gens, GbOptions{});
    std::vector<Monomial> leads;
    for (const auto& g : gb) leads.push_back(g.leading_term().mono);
    auto in_ideal = [&](const Monomial& m) {
      for (const auto& l : leads)
        if (l.divides(m)) return true;
      return false;
    };
    // strong stability: x_i * m / x_j stays in the ideal for i < j
    for (const auto& m : leads)
      for (int j = 0; j < nv; ++j) {
        if (!m[j]) continue;
        for (int i = 0; i < j; ++i)
          if (!in_ideal(m / Monomial::variable(j) * Monomial::variable(i))) return std::nullopt;
      }
    int top = 0;
    for (const auto& m : leads) top = std::max(top, m.degree());
    return top;
  };
  constexpr int kAttempts = 6;
  std::optional<int> prev;
  for (int a = 0; a < kAttempts; ++a) {
    auto cur = one_gin(derive_seed(seed, 0x61u + a));
    if (!cur) continue;
    if (prev && *prev == *cur) return *cur;
    prev = cur;
  }
  throw Error(ErrorKind::genericity_failure, "generic initial ideal did not stabilize");
}

int ell_from_strand(const std::vector<int64_t>& b1) {
  for (size_t p = 1; p < b1.size(); ++p)
    if (b1[p] == 0) return static_cast<int>(p) - 1;
  return static_cast<int>(b1.size()) - 1;
}

int gl_index_from_strand(const std::vector<int64_t>& b2, bool two_regular) {
  if (b2.empty() || b2[0] != 0) return StrandTable::kNone;
  for (size_t i = 1; i < b2.size(); ++i)
    if (b2[i] != 0) return static_cast<int>(i) - 1;
  return two_regular ? StrandTable::kInfinity : static_cast<int>(b2.size()) - 1;
}

template <class F>
StrandTable strand_table(const Variety<F>& V, uint64_t seed, int bound) {
  StrandTable t;
  t.b1 = betti_strand_one(V);
  t.ell = ell_from_strand(t.b1);
  t.b2 = betti_strand_two(V, bound, &t.bound_clipped);
  t.bound = static_cast<int>(t.b2.size()) - 1;
  bool all_zero = std::all_of(t.b2.begin(), t.b2.end(), [](int64_t v) { return v == 0; });
  bool two_regular = all_zero && regularity_via_gin(V, seed) <= 2;
  t.gl_index = gl_index_from_strand(t.b2, two_regular);
  return t;
}

template <class F>
Variety<F> extract_syzygy_variety(const Variety<F>& V, uint64_t seed) {
  require_nondegenerate(V);
  const F& K = V.field();
  const int c = V.codim(), n = V.dim(), nv = V.ideal.nvars();
  const int64_t d = V.degree();
  if (c < 2) throw Error(ErrorKind::input_contract, "extraction needs codimension at least 2");
  if (d <= c + 1) throw Error(ErrorKind::input_contract, "the variety already has minimal degree");
  auto quads = graded_piece_basis(V.ideal, 2);
  auto m = quadric_koszul_matrix(K, nv, quads, c - 1);
  std::vector<std::vector<typename F::Elem>> kernel;
  if (c - 1 == 1) {
    for (size_t i = 0; i < quads.size(); ++i) {
      std::vector<typename F::Elem> v(quads.size(), K.zero());
      v[i] = K.one();
      kernel.push_back(v);
    }
  } else {
    kernel = kernel_basis(m);
  }
  if (kernel.empty()) throw Error(ErrorKind::input_contract, "the top quadratic strand piece vanishes");
  auto wedges = wedge_basis(nv, c - 2);
  Rng rng(seed);
  std::string last_reason;
  constexpr int kAttempts = 6;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<typename F::Elem> gamma = kernel.front();
    if (attempt > 0) {
      gamma.assign(kernel.front().size(), K.zero());
      for (const auto& v : kernel) {
        auto coef = rng.element(K);
        for (size_t i = 0; i < v.size(); ++i) gamma[i] = K.add(gamma[i], K.mul(coef, v[i]));
      }
    }
    std::vector<Polynomial<F>> coeff_quadrics;
    for (size_t w = 0; w < wedges.size(); ++w) {
      Polynomial<F> q(K, nv);
      for (size_t j = 0; j < quads.size(); ++j) {
        const auto& g = gamma[w * quads.size() + j];
        if (!K.is_zero(g)) q = q + quads[j].scaled(g);
      }
      if (!q.is_zero()) coeff_quadrics.push_back(q);
    }
    std::vector<Term<F>> terms;
    for (int i = 0; i < nv; ++i) terms.push_back({Monomial::variable(i), K.from_int(rng.between(1, 97))});
    auto ell = Polynomial<F>::from_terms(K, nv, std::move(terms));
    Ideal<F> raw(K, nv, span_basis(coeff_quadrics, nv, K));
    Ideal<F> sat = saturate_by(raw, ell);
    Variety<F> Y{sat, std::nullopt, false, "syzygy variety of " + V.name};
    if (sat.is_unit()) {
      last_reason = "coefficient quadrics generate the unit ideal";
      continue;
    }
    if (Y.dim() != n + 1) {
      last_reason = "dimension " + std::to_string(Y.dim()) + " instead of " + std::to_string(n + 1);
      continue;
    }
    if (Y.degree() != Y.codim() + 1) {
      last_reason = "degree " + std::to_string(Y.degree()) + " is not codim + 1";
      continue;
    }
    if (!V.ideal.contains(Y.ideal)) {
      last_reason = "I(Y) is not contained in I(X)";
      continue;
    }
    Y.totally_real = V.totally_real;
    return Y;
  }
  throw Error(ErrorKind::extraction_failure, "extraction failed verification: " + last_reason);
}

#define QPLAB_INSTANTIATE(F)                                                         \
  template std::vector<int64_t> betti_strand_one(const Variety<F>&);                 \
  template int64_t betti_p1_via_quadrics(const Variety<F>&, int);                    \
  template std::vector<int64_t> betti_strand_two(const Variety<F>&, int, bool*);     \
  template int regularity_via_gin(const Variety<F>&, uint64_t);                      \
  template StrandTable strand_table(const Variety<F>&, uint64_t, int);               \
  template Variety<F> extract_syzygy_variety(const Variety<F>&, uint64_t);

QPLAB_INSTANTIATE(PrimeField)
QPLAB_INSTANTIATE(RationalField)

}  // namespace qplab
