#include "qplab/groebner.hpp"

#include <algorithm>
#include <set>

namespace qplab {

namespace {

template <class F>
using TermVec = std::vector<Term<F>>;

template <class F>
struct Engine {
  using Elem = typename F::Elem;

  struct Member {
    TermVec<F> terms;  // descending in `order`, monic
    Monomial lead;
    uint32_t mask;
    int wdeg;
    bool active = true;
  };

  struct Pair {
    int wdeg;
    Monomial lcm;
    int i, j;
  };

  F K;
  int nvars;
  const GbOptions& opts;
  std::vector<Member> basis;
  GbStats stats;

  Engine(F field, int n, const GbOptions& o) : K(std::move(field)), nvars(n), opts(o) {}

  int cmp(const Monomial& a, const Monomial& b) const { return opts.order.compare(a, b, nvars); }
  int wdeg(const Monomial& m) const { return m.weighted_degree(opts.weights); }

  TermVec<F> sorted(const Polynomial<F>& p) const {
    TermVec<F> t = p.terms();
    if (!(opts.order == MonomialOrder::grevlex()))
      std::sort(t.begin(), t.end(), [&](const Term<F>& a, const Term<F>& b) { return cmp(a.mono, b.mono) > 0; });
    return t;
  }

  void make_monic(TermVec<F>& t) const {
    if (t.empty() || K.is_one(t.front().coef)) return;
    Elem inv = K.inv(t.front().coef);
    for (auto& x : t) x.coef = K.mul(x.coef, inv);
  }

  const Member* find_reducer(const Monomial& m) const {
    uint32_t mask = m.support_mask();
    for (const auto& g : basis) {
      if (!g.active || (g.mask & ~mask)) continue;
      if (g.lead.divides(m)) return &g;
    }
    return nullptr;
  }

  // a + c * q * b[1..], both descending
  TermVec<F> merge_sub(const TermVec<F>& a, size_t from, const TermVec<F>& b, const Monomial& q,
                       const Elem& c) const {
    TermVec<F> out;
    out.reserve(a.size() - from + b.size());
    size_t i = from, j = 1;
    while (i < a.size() && j < b.size()) {
      Monomial mb = b[j].mono * q;
      int s = cmp(a[i].mono, mb);
      if (s > 0) {
        out.push_back(a[i++]);
      } else if (s < 0) {
        out.push_back({mb, K.mul(c, b[j].coef)});
        ++j;
      } else {
        Elem v = K.add(a[i].coef, K.mul(c, b[j].coef));
        if (!K.is_zero(v)) out.push_back({a[i].mono, v});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono * q, K.mul(c, b[j].coef)});
    return out;
  }

  // Full reduction against the active basis members.
  TermVec<F> normal_form(TermVec<F> f) const {
    TermVec<F> done;
    size_t pos = 0;
    while (pos < f.size()) {
      const Member* g = find_reducer(f[pos].mono);
      if (!g) {
        done.push_back(f[pos++]);
        continue;
      }
      Monomial q = f[pos].mono / g->lead;
      f = merge_sub(f, pos + 1, g->terms, q, K.neg(f[pos].coef));
      pos = 0;
    }
    return done;
  }

  struct PairLess {
    const Engine* e;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
      if (int c = e->cmp(a.lcm, b.lcm)) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  // Gebauer-Moeller installation of member h.
  void update(std::set<Pair, PairLess>& pairs, int h) {
    const Member& H = basis[h];
    std::vector<Pair> C;
    for (int g = 0; g < h; ++g) {
      if (!basis[g].active) continue;
      Monomial l = Monomial::lcm(basis[g].lead, H.lead);
      C.push_back({wdeg(l), l, g, h});
    }
    std::vector<Pair> D;
    for (size_t k = 0; k < C.size(); ++k) {
      const Pair& p = C[k];
      bool keep = basis[p.i].lead.coprime(H.lead);
      if (!keep) {
        keep = true;
        for (size_t k2 = k + 1; k2 < C.size() && keep; ++k2)
          if (C[k2].lcm.divides(p.lcm)) keep = false;
        for (size_t k2 = 0; k2 < D.size() && keep; ++k2)
          if (D[k2].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Pair& p = *it;
      if (H.lead.divides(p.lcm) && !(Monomial::lcm(basis[p.i].lead, H.lead) == p.lcm) &&
          !(Monomial::lcm(basis[p.j].lead, H.lead) == p.lcm)) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& p : D) {
      if (basis[p.i].lead.coprime(H.lead)) continue;
      if (opts.degree_bound >= 0 && p.wdeg > opts.degree_bound) continue;
      pairs.insert(p);
    }
    for (int g = 0; g < h; ++g)
      if (basis[g].active && H.lead.divides(basis[g].lead)) basis[g].active = false;
  }

  void add_member(std::set<Pair, PairLess>& pairs, TermVec<F> t) {
    make_monic(t);
    Member m;
    m.lead = t.front().mono;
    m.mask = m.lead.support_mask();
    m.wdeg = wdeg(m.lead);
    m.terms = std::move(t);
    basis.push_back(std::move(m));
    update(pairs, static_cast<int>(basis.size()) - 1);
  }

  TermVec<F> spoly(const Pair& p) const {
    const Member& a = basis[p.i];
    const Member& b = basis[p.j];
    Monomial qa = p.lcm / a.lead, qb = p.lcm / b.lead;
    TermVec<F> ta;
    ta.reserve(a.terms.size());
    for (const auto& t : a.terms) ta.push_back({t.mono * qa, t.coef});
    return merge_sub(ta, 1, b.terms, qb, K.neg(K.one()));
  }

  std::vector<Polynomial<F>> run(const std::vector<Polynomial<F>>& gens) {
    std::set<Pair, PairLess> pairs(PairLess{this});
    // inputs enter in increasing degree, so input reduction respects the grading
    std::vector<TermVec<F>> inputs;
    for (const auto& g : gens)
      if (!g.is_zero()) inputs.push_back(sorted(g));
    std::stable_sort(inputs.begin(), inputs.end(), [&](const TermVec<F>& a, const TermVec<F>& b) {
      return wdeg(a.front().mono) < wdeg(b.front().mono);
    });
    size_t next_input = 0;
    while (true) {
      int next_pair_deg = pairs.empty() ? INT32_MAX : pairs.begin()->wdeg;
      int next_input_deg = next_input < inputs.size() ? wdeg(inputs[next_input].front().mono) : INT32_MAX;
      if (next_pair_deg == INT32_MAX && next_input_deg == INT32_MAX) break;
      TermVec<F> h;
      if (next_input_deg <= next_pair_deg) {
        if (opts.degree_bound >= 0 && next_input_deg > opts.degree_bound) {
          next_input = inputs.size();
          continue;
        }
        h = normal_form(inputs[next_input++]);
      } else {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        ++stats.pairs_considered;
        h = normal_form(spoly(p));
        ++stats.pairs_reduced;
        if (h.empty()) ++stats.zero_reductions;
      }
      if (!h.empty()) add_member(pairs, std::move(h));
    }
    return finish();
  }

  std::vector<Polynomial<F>> finish() {
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
      if (basis[i].active) keep.push_back(i);
    std::sort(keep.begin(), keep.end(), [&](int a, int b) { return cmp(basis[a].lead, basis[b].lead) < 0; });
    // interreduce tails against the other minimal members
    std::vector<Polynomial<F>> out;
    for (int idx : keep) {
      Member& m = basis[idx];
      m.active = false;
      TermVec<F> tail(m.terms.begin() + 1, m.terms.end());
      TermVec<F> red = normal_form(std::move(tail));
      m.active = true;
      TermVec<F> full;
      full.reserve(red.size() + 1);
      full.push_back(m.terms.front());
      full.insert(full.end(), red.begin(), red.end());
      m.terms = full;
      out.push_back(Polynomial<F>::from_terms(K, nvars, std::move(full)));
    }
    return out;
  }
};

}  // namespace

template <class F>
std::vector<Polynomial<F>> compute_groebner_basis(const std::vector<Polynomial<F>>& gens, const GbOptions& opts,
                                                  GbStats* stats) {
  if (gens.empty()) return {};
  const F& K = gens.front().field();
  const int n = gens.front().nvars();
  for (const auto& g : gens) check_same_ring(g, gens.front());
  if (!opts.weights.empty() && static_cast<int>(opts.weights.size()) != n)
    throw Error(ErrorKind::ring_mismatch, "weight vector length does not match the ring");
  Engine<F> e(K, n, opts);
  auto out = e.run(gens);
  if (stats) *stats = e.stats;
  return out;
}

template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G, const MonomialOrder& order) {
  GbOptions opts;
  opts.order = order;
  Engine<F> e(f.field(), f.nvars(), opts);
  for (const auto& g : G) {
    check_same_ring(f, g);
    if (g.is_zero()) throw Error(ErrorKind::domain, "reduction by the zero polynomial");
    typename Engine<F>::Member m;
    m.terms = e.sorted(g);
    e.make_monic(m.terms);
    m.lead = m.terms.front().mono;
    m.mask = m.lead.support_mask();
    m.wdeg = m.lead.degree();
    e.basis.push_back(std::move(m));
  }
  return Polynomial<F>::from_terms(f.field(), f.nvars(), e.normal_form(e.sorted(f)));
}

template std::vector<Polynomial<PrimeField>> compute_groebner_basis(const std::vector<Polynomial<PrimeField>>&,
                                                                    const GbOptions&, GbStats*);
template std::vector<Polynomial<RationalField>> compute_groebner_basis(
    const std::vector<Polynomial<RationalField>>&, const GbOptions&, GbStats*);
template Polynomial<PrimeField> reduce(const Polynomial<PrimeField>&, const std::vector<Polynomial<PrimeField>>&,
                                       const MonomialOrder&);
template Polynomial<RationalField> reduce(const Polynomial<RationalField>&,
                                          const std::vector<Polynomial<RationalField>>&, const MonomialOrder&);

}  // namespace qplab
