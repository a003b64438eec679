#include "qplab/variety.hpp"

#include <algorithm>
#include <numeric>

#include "qplab/linalg.hpp"
#include "qplab/univariate.hpp"

namespace qplab {

template <class F>
int RationalMap<F>::degree() const {
  for (const auto& c : components)
    if (!c.is_zero()) return c.degree();
  return 0;
}

template <class F>
std::vector<typename F::Elem> RationalMap<F>::evaluate(const std::vector<typename F::Elem>& src) const {
  std::vector<typename F::Elem> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(src));
  return out;
}

template <class F>
bool point_on(const Ideal<F>& I, const std::vector<typename F::Elem>& pt) {
  if (static_cast<int>(pt.size()) != I.nvars()) throw Error(ErrorKind::ring_mismatch, "point has the wrong length");
  for (const auto& g : I.generators())
    if (!I.field().is_zero(g.evaluate(pt))) return false;
  return true;
}

namespace {

template <class F>
Polynomial<F> var(const F& K, int n, int i) {
  return Polynomial<F>::variable(K, n, i);
}

template <class F>
Polynomial<F> mono(const F& K, int n, const std::vector<int>& exps) {
  std::vector<int> e(exps);
  e.resize(n, 0);
  return Polynomial<F>::monomial(K, n, Monomial::from_exponents(e), K.one());
}

template <class F>
Polynomial<F> random_form(const F& K, int nvars, int deg, Rng& rng, int bound = 9) {
  std::vector<Term<F>> terms;
  for (const auto& m : monomials_of_degree(nvars, deg)) terms.push_back({m, K.from_int(rng.between(-bound, bound))});
  return Polynomial<F>::from_terms(K, nvars, std::move(terms));
}

// 2x2 minors of the 2 x m matrix with rows `top`, `bottom`.
template <class F>
std::vector<Polynomial<F>> two_by_two_minors(const std::vector<Polynomial<F>>& top,
                                             const std::vector<Polynomial<F>>& bottom) {
  std::vector<Polynomial<F>> out;
  for (size_t i = 0; i < top.size(); ++i)
    for (size_t j = i + 1; j < top.size(); ++j) out.push_back(top[i] * bottom[j] - top[j] * bottom[i]);
  return out;
}

}  // namespace

template <class F>
Variety<F> projective_space(const F& K, int r) {
  if (r < 0) throw Error(ErrorKind::domain, "negative dimension");
  RationalMap<F> id;
  id.source_nvars = r + 1;
  for (int i = 0; i <= r; ++i) id.components.push_back(var(K, r + 1, i));
  return Variety<F>{Ideal<F>(K, r + 1), id, true, "P" + std::to_string(r)};
}

template <class F>
Variety<F> image_of_map(const Variety<F>& source, const RationalMap<F>& phi) {
  const F& K = source.field();
  const int s1 = source.ideal.nvars();
  if (phi.source_nvars != s1) throw Error(ErrorKind::ring_mismatch, "map source does not match the variety");
  if (phi.components.empty()) throw Error(ErrorKind::domain, "map without components");
  const int e = phi.degree();
  for (const auto& c : phi.components) {
    if (c.nvars() != s1) throw Error(ErrorKind::ring_mismatch, "map component in the wrong ring");
    if (!c.is_zero() && (!c.is_homogeneous() || c.degree() != e))
      throw Error(ErrorKind::domain, "map components must be forms of one degree");
  }
  bool defined = false;
  for (const auto& c : phi.components) defined = defined || !source.ideal.contains(c);
  if (!defined) throw Error(ErrorKind::indeterminacy, "every component vanishes on the source");

  const int t1 = phi.target_nvars();
  const int n = s1 + t1;
  std::vector<int> weights(n, 1);
  for (int i = s1; i < n; ++i) weights[i] = e;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : source.ideal.generators()) gens.push_back(g.relabeled(0, n));
  for (int i = 0; i < t1; ++i) gens.push_back(var(K, n, s1 + i) - phi.components[i].relabeled(0, n));
  Ideal<F> graph(K, n, std::move(gens), weights);
  Ideal<F> image = elimination_ideal(graph, s1);

  RationalMap<F> param;
  if (source.param) {
    const auto& sp = *source.param;
    param.source_nvars = sp.source_nvars;
    param.source_ideal = sp.source_ideal;
    param.rational = sp.rational && phi.rational;
    for (const auto& c : phi.components) param.components.push_back(c.substitute(sp.components));
  } else {
    param = phi;
    param.source_ideal = source.ideal.generators();
  }
  bool real = source.totally_real && phi.rational;
  return Variety<F>{std::move(image), std::move(param), real, source.name + "->image"};
}

template <class F>
Variety<F> scroll(const F& K, const std::vector<int>& a) {
  if (a.empty()) throw Error(ErrorKind::degenerate_input, "scroll needs at least one block");
  int total = 0, top = 0;
  for (int ai : a) {
    if (ai < 0) throw Error(ErrorKind::domain, "negative scroll degree");
    total += ai;
    top = std::max(top, ai);
  }
  if (total == 0) throw Error(ErrorKind::degenerate_input, "all scroll degrees are zero");
  const int n = total + static_cast<int>(a.size());
  std::vector<Polynomial<F>> row0, row1;
  int base = 0;
  for (int ai : a) {
    for (int j = 0; j < ai; ++j) {
      row0.push_back(var(K, n, base + j));
      row1.push_back(var(K, n, base + j + 1));
    }
    base += ai + 1;
  }
  Ideal<F> I(K, n, two_by_two_minors(row0, row1));

  // source (s, t, u_1..u_k); block i, entry j -> u_i s^(top - j) t^j
  const int k = static_cast<int>(a.size());
  RationalMap<F> param;
  param.source_nvars = k + 2;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= a[i]; ++j) {
      std::vector<int> e(k + 2, 0);
      e[0] = top - j;
      e[1] = j;
      e[2 + i] = 1;
      param.components.push_back(mono(K, k + 2, e));
    }
  std::string name = "S(";
  for (int i = 0; i < k; ++i) name += (i ? "," : "") + std::to_string(a[i]);
  return Variety<F>{std::move(I), std::move(param), true, name + ")"};
}

template <class F>
Variety<F> rational_normal_curve(const F& K, int dd) {
  if (dd < 1) throw Error(ErrorKind::domain, "degree must be at least 1");
  auto V = scroll(K, std::vector<int>{dd});
  RationalMap<F> param;
  param.source_nvars = 2;
  for (int j = 0; j <= dd; ++j) param.components.push_back(mono(K, 2, {dd - j, j}));
  V.param = std::move(param);
  V.name = "RNC(" + std::to_string(dd) + ")";
  return V;
}

template <class F>
Variety<F> veronese(const F& K, int n, int dd) {
  if (n < 1 || dd < 1) throw Error(ErrorKind::domain, "veronese needs n >= 1 and degree >= 1");
  RationalMap<F> phi;
  phi.source_nvars = n + 1;
  for (const auto& m : monomials_of_degree(n + 1, dd))
    phi.components.push_back(Polynomial<F>::monomial(K, n + 1, m, K.one()));
  auto V = image_of_map(projective_space(K, n), phi);
  V.name = "v" + std::to_string(dd) + "(P" + std::to_string(n) + ")";
  return V;
}

template <class F>
Variety<F> quadric(const F& K, int r) {
  if (r < 2) throw Error(ErrorKind::domain, "quadric needs r >= 2");
  const int n = r + 1;
  auto q = var(K, n, 0) * var(K, n, 1);
  for (int i = 2; i <= r; ++i) q = q - var(K, n, i) * var(K, n, i);
  // projection from [1:0:...:0]: source u_1..u_r
  RationalMap<F> param;
  param.source_nvars = r;
  auto u = [&](int i) { return var(K, r, i - 1); };
  auto head = Polynomial<F>(K, r);
  for (int i = 2; i <= r; ++i) head = head + u(i) * u(i);
  param.components.push_back(head);
  param.components.push_back(u(1) * u(1));
  for (int i = 2; i <= r; ++i) param.components.push_back(u(1) * u(i));
  return Variety<F>{Ideal<F>(K, n, {q}), std::move(param), true, "Q" + std::to_string(r)};
}

template <class F>
std::pair<Variety<F>, Variety<F>> del_pezzo_quintic(const F& K) {
  // cubics through [1:0:0], [0:1:0], [0:0:1], [1:1:1] are l*q1, l*q2 with q1, q2
  // spanning the conics through the four points
  auto x = var(K, 3, 0), y = var(K, 3, 1), z = var(K, 3, 2);
  auto q1 = x * y - x * z;
  auto q2 = x * y - y * z;
  RationalMap<F> phi;
  phi.source_nvars = 3;
  for (const auto& l : {x, y, z}) {
    phi.components.push_back(l * q1);
    phi.components.push_back(l * q2);
  }
  auto X = image_of_map(projective_space(K, 2), phi);
  X.name = "dP5";
  auto Y = scroll(K, std::vector<int>{1, 1, 1});
  return {std::move(X), std::move(Y)};
}

template <class F>
Variety<F> coordinate_line(const F& K, int r) {
  std::vector<Polynomial<F>> gens;
  for (int i = 2; i <= r; ++i) gens.push_back(var(K, r + 1, i));
  RationalMap<F> param;
  param.source_nvars = 2;
  for (int i = 0; i <= r; ++i) param.components.push_back(i < 2 ? var(K, 2, i) : Polynomial<F>(K, 2));
  return Variety<F>{Ideal<F>(K, r + 1, gens), std::move(param), true, "L"};
}

template <class F>
Variety<F> cmr_curve(const F& K, int r, int dd, bool on_scroll, uint64_t seed) {
  if (r < 4 || dd < r + 2)
    throw Error(ErrorKind::precondition, "cmr_curve needs r >= 4 and d >= r + 2");
  const int secant = dd - r + 2;
  auto s = var(K, 2, 0), t = var(K, 2, 1);
  auto L = coordinate_line(K, r);
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    RationalMap<F> phi;
    phi.source_nvars = 2;
    Polynomial<F> h(K, 2);
    if (on_scroll) {
      auto u = random_form(K, 2, dd - 1, rng);
      h = random_form(K, 2, secant, rng);
      phi.components = {u * s, u * t};
    } else {
      auto f = random_form(K, 2, dd, rng);
      auto g = random_form(K, 2, dd, rng);
      h = random_form(K, 2, secant, rng);
      phi.components = {f, g};
    }
    for (int j = 0; j <= r - 2; ++j)
      phi.components.push_back(h * mono(K, 2, {r - 2 - j, j}));
    try {
      auto C = image_of_map(projective_space(K, 1), phi);
      if (C.dim() != 1 || C.degree() != dd) continue;
      if (secant_order(C, L) != secant) continue;
      C.name = "cmr(" + std::to_string(r) + "," + std::to_string(dd) + (on_scroll ? ",on)" : ",off)");
      return C;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::indeterminacy) throw;
    }
  }
  throw Error(ErrorKind::genericity_failure, "no admissible coefficients found for the maximal-regularity curve");
}

template <class F>
Polynomial<F> fermat_quartic(const F& K) {
  auto x = var(K, 3, 0), y = var(K, 3, 1), z = var(K, 3, 2);
  return x.pow(4) + y.pow(4) - z.pow(4);
}

template <class F>
std::vector<std::vector<typename F::Elem>> fermat_rational_points(const F& K) {
  auto one = K.one(), zero = K.zero(), m1 = K.neg(K.one());
  return {{one, zero, one}, {m1, zero, one}, {zero, one, one}, {zero, m1, one}};
}

template <class F>
Variety<F> plane_curve_reembed(const Polynomial<F>& f, int k, const std::vector<std::vector<typename F::Elem>>& pts,
                               bool rational_points) {
  const F& K = f.field();
  if (f.nvars() != 3 || !f.is_homogeneous() || f.degree() < 1)
    throw Error(ErrorKind::domain, "plane_curve_reembed needs a ternary form");
  if (k < 1) throw Error(ErrorKind::domain, "twist degree must be positive");
  for (const auto& p : pts) {
    if (p.size() != 3) throw Error(ErrorKind::bad_basepoint, "base points must have three coordinates");
    if (!K.is_zero(f.evaluate(p))) throw Error(ErrorKind::bad_basepoint, "base point is not on the curve");
  }
  const int e = f.degree();
  auto monos = monomials_of_degree(3, k);
  // forms of degree k through the points: kernel of the evaluation matrix
  DenseMatrix<F> eval(K, 0, monos.size());
  for (const auto& p : pts) {
    std::vector<typename F::Elem> row;
    for (const auto& m : monos)
      row.push_back(Polynomial<F>::monomial(K, 3, m, K.one()).evaluate(p));
    eval.append_row(row);
  }
  std::vector<std::vector<typename F::Elem>> through;
  if (pts.empty()) {
    for (size_t i = 0; i < monos.size(); ++i) {
      std::vector<typename F::Elem> v(monos.size(), K.zero());
      v[i] = K.one();
      through.push_back(v);
    }
  } else {
    through = kernel_basis(eval);
  }
  auto to_poly = [&](const std::vector<typename F::Elem>& v) {
    std::vector<Term<F>> terms;
    for (size_t i = 0; i < monos.size(); ++i)
      if (!K.is_zero(v[i])) terms.push_back({monos[i], v[i]});
    return Polynomial<F>::from_terms(K, 3, std::move(terms));
  };
  // drop the multiples of f: keep a complement of f * S_{k-e}
  std::vector<Polynomial<F>> span;
  if (k >= e)
    for (const auto& m : monomials_of_degree(3, k - e)) span.push_back(f.times_monomial(m, K.one()));
  size_t have = span_basis(span, 3, K).size();
  RationalMap<F> phi;
  phi.source_nvars = 3;
  phi.rational = rational_points;
  for (const auto& v : through) {
    auto g = to_poly(v);
    span.push_back(g);
    size_t now = span_basis(span, 3, K).size();
    if (now > have) {
      phi.components.push_back(primitive_part(g));
      have = now;
    } else {
      span.pop_back();
    }
  }
  if (phi.components.size() < 4)
    throw Error(ErrorKind::precondition, "linear system too small for a space curve");
  Variety<F> plane{Ideal<F>(K, 3, {f}), std::nullopt, rational_points, "plane curve"};
  auto C = image_of_map(plane, phi);
  const int64_t expected = static_cast<int64_t>(k) * e - static_cast<int64_t>(pts.size());
  if (C.dim() != 1 || C.degree() != expected)
    throw Error(ErrorKind::non_embedding, "image has degree " + std::to_string(C.degree()) + ", expected " +
                                              std::to_string(expected));
  C.totally_real = rational_points;
  C.name = "plane curve model d=" + std::to_string(expected);
  return C;
}

namespace {

using PF = PrimeField;

// Nonzero solution of homogeneous forms in nv variables with finitely many
// projective zeros (generically), or nullopt.
std::optional<std::vector<uint32_t>> solve_points(const PF& K, std::vector<Polynomial<PF>> gens, int nv, Rng& rng) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); }), gens.end());
  if (gens.empty()) {
    std::vector<uint32_t> p(nv);
    for (auto& c : p) c = rng.element(K);
    if (std::all_of(p.begin(), p.end(), [](uint32_t c) { return c == 0; })) p[0] = 1;
    return p;
  }
  if (nv == 1) return std::nullopt;
  // binary forms in the first two variables after eliminating the rest
  std::vector<Polynomial<PF>> binary;
  if (nv == 2) {
    binary = gens;
  } else {
    std::vector<Polynomial<PF>> images;
    images.push_back(var(K, nv, nv - 2));
    images.push_back(var(K, nv, nv - 1));
    for (int j = 2; j < nv; ++j) images.push_back(var(K, nv, j - 2));
    std::vector<Polynomial<PF>> moved;
    for (const auto& g : gens) moved.push_back(g.substitute(images));
    auto E = elimination_ideal(Ideal<PF>(K, nv, moved), nv - 2);
    binary = E.generators();
  }
  // roots [a:1] of the gcd of the dehomogenized binary forms
  UPoly g;
  bool any = false;
  for (const auto& b : binary) {
    if (b.is_zero()) continue;
    UPoly u(b.degree() + 1, 0);
    for (const auto& t : b.terms()) u[t.mono[0]] = K.add(u[t.mono[0]], t.coef);
    u = upoly_trim(u);
    g = any ? upoly_gcd(K, g, u) : u;
    any = true;
  }
  std::vector<uint32_t> roots;
  if (!any) {
    roots.push_back(rng.element(K));
  } else {
    roots = upoly_roots(K, g, rng);
  }
  // shuffle deterministically
  for (size_t i = roots.size(); i > 1; --i) std::swap(roots[i - 1], roots[rng.next() % i]);
  for (uint32_t a : roots) {
    // u0 = a * v0, u_j = v_{j-1}
    std::vector<Polynomial<PF>> images;
    images.push_back(var(K, nv - 1, 0).scaled(a));
    for (int j = 1; j < nv; ++j) images.push_back(var(K, nv - 1, j - 1));
    std::vector<Polynomial<PF>> sub;
    for (const auto& h : gens) sub.push_back(h.substitute(images));
    auto rest = solve_points(K, sub, nv - 1, rng);
    if (!rest) continue;
    std::vector<uint32_t> p(nv);
    p[0] = K.mul(a, (*rest)[0]);
    for (int j = 1; j < nv; ++j) p[j] = (*rest)[j - 1];
    bool ok = true;
    for (const auto& h : gens) ok = ok && h.evaluate(p) == 0;
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace

std::vector<uint32_t> find_point_by_slicing(const Ideal<PrimeField>& I, Rng& rng) {
  const PF& K = I.field();
  const int nv = I.nvars();
  const int r = nv - 1;
  const int n = I.is_zero() ? r : I.hilbert().dim;
  if (n < 0) throw Error(ErrorKind::empty_variety, "no projective points");
  const int c = r - n;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::vector<uint32_t>> M(nv, std::vector<uint32_t>(c + 1));
    for (auto& row : M)
      for (auto& v : row) v = rng.element(K);
    std::vector<Polynomial<PF>> images;
    for (int i = 0; i < nv; ++i) {
      std::vector<Term<PF>> terms;
      for (int j = 0; j <= c; ++j) terms.push_back({Monomial::variable(j), M[i][j]});
      images.push_back(Polynomial<PF>::from_terms(K, c + 1, std::move(terms)));
    }
    std::vector<Polynomial<PF>> pulled;
    for (const auto& g : I.generators()) pulled.push_back(g.substitute(images));
    auto u = solve_points(K, pulled, c + 1, rng);
    if (!u) continue;
    std::vector<uint32_t> x(nv, 0);
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j <= c; ++j) x[i] = K.add(x[i], K.mul(M[i][j], (*u)[j]));
    if (std::all_of(x.begin(), x.end(), [](uint32_t v) { return v == 0; })) continue;
    if (point_on(I, x)) return x;
  }
  throw Error(ErrorKind::sampling_failure, "slicing search found no point");
}

template <class F>
std::vector<typename F::Elem> sample_point(const Variety<F>& V, uint64_t seed) {
  const F& K = V.field();
  Rng rng(seed);
  if (!V.param) {
    if constexpr (is_prime_field_v<F>) {
      return find_point_by_slicing(V.ideal, rng);
    } else {
      throw Error(ErrorKind::no_sampler, "no parameterization and the field is Q");
    }
  }
  const auto& phi = *V.param;
  constexpr int kMaxRejections = 100;
  for (int attempt = 0; attempt <= kMaxRejections; ++attempt) {
    std::vector<typename F::Elem> src;
    if (phi.source_ideal.empty()) {
      for (int i = 0; i < phi.source_nvars; ++i) src.push_back(rng.element(K));
    } else if constexpr (is_prime_field_v<F>) {
      src = find_point_by_slicing(Ideal<F>(K, phi.source_nvars, phi.source_ideal), rng);
    } else {
      throw Error(ErrorKind::no_sampler, "the parameterization source has no sampler over Q");
    }
    auto pt = phi.evaluate(src);
    if (std::all_of(pt.begin(), pt.end(), [&](const auto& c) { return K.is_zero(c); })) continue;
    if (!point_on(V.ideal, pt))
      throw Error(ErrorKind::membership, "parameterization produced a point off the variety");
    return pt;
  }
  throw Error(ErrorKind::sampling_failure, "too many samples in the indeterminacy locus");
}

template <class F>
int64_t secant_order(const Variety<F>& V, const Variety<F>& L) {
  if (V.ideal.nvars() != L.ideal.nvars()) throw Error(ErrorKind::ring_mismatch, "varieties in different spaces");
  if (L.ideal.contains(V.ideal)) throw Error(ErrorKind::containment, "the line lies on the curve");
  const F& K = V.field();
  const int n = V.ideal.nvars();
  Rng rng(0x5ecu + static_cast<uint64_t>(n));
  std::vector<Term<F>> terms;
  for (int i = 0; i < n; ++i) terms.push_back({Monomial::variable(i), K.from_int(rng.between(1, 97))});
  auto ell = Polynomial<F>::from_terms(K, n, std::move(terms));
  auto J = saturate_by(ideal_sum(V.ideal, L.ideal), ell);
  if (J.is_unit()) return 0;
  const auto& h = J.hilbert();
  if (h.dim > 0) throw Error(ErrorKind::containment, "intersection is not finite");
  return h.dim < 0 ? 0 : h.degree;
}

template <class F>
std::vector<std::string> ideal_lines(const Ideal<F>& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators()) out.push_back(primitive_part(g).to_string());
  return out;
}

#define QPLAB_INSTANTIATE(F)                                                                                 \
  template struct RationalMap<F>;                                                                            \
  template bool point_on(const Ideal<F>&, const std::vector<F::Elem>&);                                      \
  template Variety<F> projective_space(const F&, int);                                                       \
  template Variety<F> image_of_map(const Variety<F>&, const RationalMap<F>&);                                \
  template Variety<F> rational_normal_curve(const F&, int);                                                  \
  template Variety<F> scroll(const F&, const std::vector<int>&);                                             \
  template Variety<F> veronese(const F&, int, int);                                                          \
  template Variety<F> quadric(const F&, int);                                                                \
  template std::pair<Variety<F>, Variety<F>> del_pezzo_quintic(const F&);                                    \
  template Variety<F> cmr_curve(const F&, int, int, bool, uint64_t);                                         \
  template Variety<F> coordinate_line(const F&, int);                                                        \
  template Variety<F> plane_curve_reembed(const Polynomial<F>&, int, const std::vector<std::vector<F::Elem>>&, \
                                          bool);                                                             \
  template Polynomial<F> fermat_quartic(const F&);                                                           \
  template std::vector<std::vector<F::Elem>> fermat_rational_points(const F&);                               \
  template std::vector<F::Elem> sample_point(const Variety<F>&, uint64_t);                                   \
  template int64_t secant_order(const Variety<F>&, const Variety<F>&);                                       \
  template std::vector<std::string> ideal_lines(const Ideal<F>&);

QPLAB_INSTANTIATE(PrimeField)
QPLAB_INSTANTIATE(RationalField)

}  // namespace qplab
