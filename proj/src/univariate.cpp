#include "qplab/univariate.hpp"

#include <algorithm>

namespace qplab {

UPoly upoly_trim(UPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

UPoly upoly_mul(const PrimeField& K, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  return upoly_trim(std::move(r));
}

UPoly upoly_sub(const PrimeField& K, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
  return upoly_trim(std::move(r));
}

UPoly upoly_mod(const PrimeField& K, UPoly a, const UPoly& b) {
  if (b.empty()) throw Error(ErrorKind::domain, "univariate division by zero");
  a = upoly_trim(std::move(a));
  const uint32_t inv = K.inv(b.back());
  while (a.size() >= b.size()) {
    uint32_t c = K.mul(a.back(), inv);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] = K.sub(a[i + shift], K.mul(c, b[i]));
    a = upoly_trim(std::move(a));
  }
  return a;
}

UPoly upoly_gcd(const PrimeField& K, UPoly a, UPoly b) {
  a = upoly_trim(std::move(a));
  b = upoly_trim(std::move(b));
  while (!b.empty()) {
    UPoly r = upoly_mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    uint32_t inv = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, inv);
  }
  return a;
}

uint32_t upoly_eval(const PrimeField& K, const UPoly& a, uint32_t x) {
  uint32_t v = 0;
  for (size_t i = a.size(); i-- > 0;) v = K.add(K.mul(v, x), a[i]);
  return v;
}

namespace {

UPoly powmod(const PrimeField& K, UPoly base, uint64_t e, const UPoly& m) {
  UPoly result{1};
  base = upoly_mod(K, std::move(base), m);
  while (e) {
    if (e & 1) result = upoly_mod(K, upoly_mul(K, result, base), m);
    e >>= 1;
    if (e) base = upoly_mod(K, upoly_mul(K, base, base), m);
  }
  return result;
}

// f is a product of distinct linear factors.
void split(const PrimeField& K, const UPoly& f, Rng& rng, std::vector<uint32_t>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(K.neg(K.mul(f[0], K.inv(f[1]))));
    return;
  }
  const uint32_t p = K.characteristic();
  for (int attempt = 0; attempt < 200; ++attempt) {
    UPoly probe{rng.element(K), 1};
    UPoly h = upoly_sub(K, powmod(K, probe, (p - 1) / 2, f), UPoly{1});
    UPoly g = upoly_gcd(K, f, h);
    if (g.size() > 1 && g.size() < f.size()) {
      split(K, g, rng, out);
      // f / g via remainder-free long division
      UPoly q(f.size() - g.size() + 1, 0), rem = f;
      uint32_t inv = K.inv(g.back());
      for (size_t i = q.size(); i-- > 0;) {
        uint32_t c = K.mul(rem[i + g.size() - 1], inv);
        q[i] = c;
        for (size_t j = 0; j < g.size(); ++j) rem[i + j] = K.sub(rem[i + j], K.mul(c, g[j]));
      }
      split(K, upoly_trim(q), rng, out);
      return;
    }
  }
  throw Error(ErrorKind::sampling_failure, "root splitting did not converge");
}

}  // namespace

std::vector<uint32_t> upoly_roots(const PrimeField& K, const UPoly& f0, Rng& rng) {
  UPoly f = upoly_trim(f0);
  if (f.size() <= 1) return {};
  // product of the distinct linear factors: gcd(f, x^p - x)
  UPoly xp = powmod(K, UPoly{0, 1}, K.characteristic(), f);
  UPoly lin = upoly_gcd(K, f, upoly_sub(K, xp, UPoly{0, 1}));
  std::vector<uint32_t> out;
  split(K, lin, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qplab
