#include <algorithm>

#include "qplab/groebner.hpp"

namespace qplab {

uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  return r;
}

namespace {

using Series = std::vector<int64_t>;

void add_into(Series& a, const Series& b, int shift, int64_t sign) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Numerator N(t) with HS(S/M) = N(t) / (1 - t)^nvars.
Series numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  std::vector<int> count(nvars, 0);
  bool all_pure = true;
  for (const auto& g : gens) {
    int vars = 0;
    for (int i = 0; i < nvars; ++i) vars += g[i] != 0;
    if (vars == 1) continue;
    all_pure = false;
    for (int i = 0; i < nvars; ++i) count[i] += g[i] != 0;
  }
  if (all_pure) {
    Series r{1};
    for (const auto& g : gens) {
      Series next(r.size() + g.degree(), 0);
      add_into(next, r, 0, 1);
      add_into(next, r, g.degree(), -1);
      r = std::move(next);
    }
    return r;
  }
  // pivot on the variable occurring in most mixed generators
  int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = INT32_MAX;
  for (const auto& g : gens) {
    int vars = 0;
    for (int i = 0; i < nvars; ++i) vars += g[i] != 0;
    if (vars > 1 && g[v]) e = std::min<int>(e, g[v]);
  }
  Monomial pivot = Monomial::variable(v, e);
  // N(M) = N(M + (p)) + t^deg(p) N(M : p)
  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / Monomial::gcd(g, pivot));
  Series r = numerator(std::move(with_pivot), nvars);
  add_into(r, numerator(std::move(colon), nvars), e, 1);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

int64_t eval_at_one(const Series& s) {
  int64_t v = 0;
  for (auto c : s) v += c;
  return v;
}

// Divides by (1 - t); requires s(1) = 0.
Series divide_one_minus_t(const Series& s) {
  Series q(s.size() > 0 ? s.size() - 1 : 0, 0);
  int64_t acc = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    acc += s[i];
    q[i] = acc;
  }
  return q;
}

}  // namespace

int64_t HilbertData::hf(int t) const {
  if (t < 0) return 0;
  if (krull_dim == 0) return t < static_cast<int>(numerator.size()) ? numerator[t] : 0;
  int64_t v = 0;
  for (int i = 0; i < static_cast<int>(numerator.size()) && i <= t; ++i)
    v += numerator[i] * static_cast<int64_t>(binomial(t - i + krull_dim - 1, krull_dim - 1));
  return v;
}

mpq_class HilbertData::hp(int t) const {
  mpq_class v = 0, tp = 1;
  for (const auto& c : hp_coeffs) {
    v += c * tp;
    tp *= t;
  }
  return v;
}

HilbertData hilbert_from_monomials(const std::vector<Monomial>& gens, int nvars) {
  Series n = numerator(gens, nvars);
  if (n.empty()) throw Error(ErrorKind::empty_variety, "the ideal is the unit ideal");
  HilbertData h;
  int krull = nvars;
  while (eval_at_one(n) == 0) {
    n = divide_one_minus_t(n);
    --krull;
  }
  while (!n.empty() && n.back() == 0) n.pop_back();
  h.numerator = n;
  h.krull_dim = krull;
  h.dim = krull - 1;
  h.degree = eval_at_one(n);

  // Fit the Hilbert polynomial through dim + 2 values past the numerator
  // degree, where HF is known to be polynomial, then check two more.
  const int top = static_cast<int>(n.size());
  const int npts = h.dim + 2;
  std::vector<mpq_class> xs, ys;
  for (int j = 0; j < npts; ++j) {
    xs.emplace_back(top + j);
    ys.emplace_back(static_cast<long>(h.hf(top + j)));
  }
  // Newton divided differences, then expand to monomial coefficients.
  std::vector<mpq_class> coef = ys;
  for (int j = 1; j < npts; ++j)
    for (int i = npts - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<mpq_class> poly(1, mpq_class(0));
  for (int i = npts - 1; i >= 0; --i) {
    // poly = poly * (t - xs[i]) + coef[i]
    std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += coef[i];
    poly = std::move(next);
  }
  while (poly.size() > 1 && sgn(poly.back()) == 0) poly.pop_back();
  if (h.dim < 0) poly.assign(1, mpq_class(0));
  h.hp_coeffs = poly;
  for (int j = npts; j < npts + 2; ++j)
    if (h.hp(top + j) != mpq_class(static_cast<long>(h.hf(top + j))))
      throw Error(ErrorKind::rank, "Hilbert polynomial fit failed its verification values");
  int stab = top;
  while (stab > 0 && h.hp(stab - 1) == mpq_class(static_cast<long>(h.hf(stab - 1)))) --stab;
  h.stabilization_degree = stab;
  return h;
}

}  // namespace qplab
