#include "qplab/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace qplab {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

template <class F>
bool grevlex_greater(const Monomial& a, const Monomial& b, int n) {
  return kGrevlex.compare(a, b, n) > 0;
}

}  // namespace

template <class F>
Polynomial<F>::Polynomial(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw Error(ErrorKind::unsupported, "rings with " + std::to_string(nvars) +
                                            " variables are not supported (max 31)");
}

template <class F>
Polynomial<F> Polynomial<F>::constant(F field, int nvars, const Elem& c) {
  Polynomial p(field, nvars);
  if (!field.is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::variable(F field, int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(ErrorKind::domain, "variable index out of range");
  Polynomial p(field, nvars);
  p.terms_.push_back({Monomial::variable(i), field.one()});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::monomial(F field, int nvars, const Monomial& m, const Elem& c) {
  Polynomial p(field, nvars);
  if (!field.is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::from_terms(F field, int nvars, std::vector<Term<F>> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
    return grevlex_greater<F>(a.mono, b.mono, nvars);
  });
  Polynomial p(field, nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = field.add(p.terms_.back().coef, t.coef);
      if (field.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
    } else if (!field.is_zero(t.coef)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::from_sorted_terms(F field, int nvars, std::vector<Term<F>> terms) {
  Polynomial p(field, nvars);
  p.terms_ = std::move(terms);
  return p;
}

template <class F>
int Polynomial<F>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <class F>
bool Polynomial<F>::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

template <class F>
int Polynomial<F>::partial_degree(int begin, int end) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.partial_degree(begin, end));
  return d;
}

template <class F>
Term<F> Polynomial<F>::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorKind::domain, "leading term of the zero polynomial");
  const Term<F>* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono, nvars_) > 0) best = &t;
  return *best;
}

template <class F>
typename F::Elem Polynomial<F>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return field_.zero();
}

template <class F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::vector<Term<F>> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = kGrevlex.compare(terms_[i].mono, o.terms_[j].mono, nvars_);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Elem s = field_.add(terms_[i].coef, o.terms_[j].coef);
      if (!field_.is_zero(s)) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_sorted_terms(field_, nvars_, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = field_.neg(t.coef);
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& o) const {
  return *this + (-o);
}

template <class F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  if (terms_.empty() || o.terms_.empty()) return Polynomial(field_, nvars_);
  std::unordered_map<Monomial, Elem, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      auto [it, inserted] = acc.try_emplace(m, field_.mul(a.coef, b.coef));
      if (!inserted) it->second = field_.add(it->second, field_.mul(a.coef, b.coef));
    }
  std::vector<Term<F>> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!field_.is_zero(c)) out.push_back({m, c});
  std::sort(out.begin(), out.end(), [&](const Term<F>& a, const Term<F>& b) {
    return grevlex_greater<F>(a.mono, b.mono, nvars_);
  });
  return from_sorted_terms(field_, nvars_, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::scaled(const Elem& c) const {
  if (field_.is_zero(c)) return Polynomial(field_, nvars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = field_.mul(t.coef, c);
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::times_monomial(const Monomial& m, const Elem& c) const {
  if (field_.is_zero(c)) return Polynomial(field_, nvars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coef = field_.mul(t.coef, c);
  }
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::pow(unsigned e) const {
  Polynomial result = constant(field_, nvars_, field_.one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <class F>
Polynomial<F> Polynomial<F>::derivative(int var) const {
  std::vector<Term<F>> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, static_cast<uint16_t>(e - 1));
    Elem c = field_.mul(t.coef, field_.from_int(e));
    if (!field_.is_zero(c)) out.push_back({m, c});
  }
  return from_terms(field_, nvars_, std::move(out));
}

template <class F>
typename F::Elem Polynomial<F>::evaluate(std::span<const Elem> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error(ErrorKind::ring_mismatch, "point has wrong number of coordinates");
  // power tables keep repeated exponents cheap
  int maxdeg = std::max(degree(), 0);
  std::vector<std::vector<Elem>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    powers[i].reserve(maxdeg + 1);
    powers[i].push_back(field_.one());
    for (int e = 1; e <= maxdeg; ++e) powers[i].push_back(field_.mul(powers[i].back(), point[i]));
  }
  Elem acc = field_.zero();
  for (const auto& t : terms_) {
    Elem v = t.coef;
    for (int i = 0; i < nvars_; ++i)
      if (t.mono[i]) v = field_.mul(v, powers[i][t.mono[i]]);
    acc = field_.add(acc, v);
  }
  return acc;
}

template <class F>
Polynomial<F> Polynomial<F>::substitute(std::span<const Polynomial> images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw Error(ErrorKind::ring_mismatch, "substitution needs one image per variable");
  if (images.empty()) return *this;
  const int target_nvars = images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != target_nvars || !(im.field() == field_))
      throw Error(ErrorKind::ring_mismatch, "substitution images live in different rings");
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& tbl = powers[i];
    if (tbl.empty()) tbl.push_back(constant(field_, target_nvars, field_.one()));
    while (static_cast<int>(tbl.size()) <= e) tbl.push_back(tbl.back() * images[i]);
    return tbl[e];
  };
  std::unordered_map<Monomial, Elem, MonomialHash> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(field_, target_nvars, t.coef);
    for (int i = 0; i < nvars_; ++i)
      if (t.mono[i]) prod = prod * power(i, t.mono[i]);
    for (const auto& pt : prod.terms()) {
      auto [it, inserted] = acc.try_emplace(pt.mono, pt.coef);
      if (!inserted) it->second = field_.add(it->second, pt.coef);
    }
  }
  std::vector<Term<F>> out;
  for (auto& [m, c] : acc)
    if (!field_.is_zero(c)) out.push_back({m, c});
  return from_terms(field_, target_nvars, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.front().coef));
}

template <class F>
Polynomial<F> Polynomial<F>::relabeled(int offset, int new_nvars) const {
  Polynomial r(field_, new_nvars);
  std::vector<Term<F>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = offset >= 0 ? t.mono.shifted_up(offset) : t.mono.shifted_down(-offset);
    if (offset < 0)
      for (int i = 0; i < -offset; ++i)
        if (t.mono[i]) throw Error(ErrorKind::domain, "relabeling drops a variable in use");
    if (m.last_variable() >= new_nvars)
      throw Error(ErrorKind::ring_mismatch, "polynomial uses variables beyond the target ring");
    out.push_back({m, t.coef});
  }
  return from_terms(field_, new_nvars, std::move(out));
}

template <class F>
bool Polynomial<F>::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || !(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

template <class F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = field_.is_negative_repr(t.coef);
    Elem mag = negative ? field_.neg(t.coef) : t.coef;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = t.mono.to_string();
    if (t.mono.is_one()) {
      out += field_.to_string(mag);
    } else if (field_.is_one(mag)) {
      out += mono;
    } else {
      out += field_.to_string(mag) + "*" + mono;
    }
  }
  return out;
}

template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& a, const Polynomial<F>& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw Error(ErrorKind::domain, "division by the zero polynomial");
  const F& K = a.field();
  const auto& lead = b.leading_term();
  Polynomial<F> rem = a;
  std::vector<Term<F>> quot;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!lead.mono.divides(lt.mono))
      throw Error(ErrorKind::domain, "polynomial division is not exact");
    Monomial q = lt.mono / lead.mono;
    auto c = K.div(lt.coef, lead.coef);
    quot.push_back({q, c});
    rem = rem - b.times_monomial(q, c);
  }
  return Polynomial<F>::from_terms(K, a.nvars(), std::move(quot));
}

template <>
Polynomial<PrimeField> primitive_part(const Polynomial<PrimeField>& f) {
  return f.monic();
}

template <>
Polynomial<RationalField> primitive_part(const Polynomial<RationalField>& f) {
  if (f.is_zero()) return f;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(f.leading_term().coef) < 0) scale = -scale;
  return f.scaled(scale);
}

template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;
template Polynomial<PrimeField> divide_exact(const Polynomial<PrimeField>&, const Polynomial<PrimeField>&);
template Polynomial<RationalField> divide_exact(const Polynomial<RationalField>&,
                                                const Polynomial<RationalField>&);

}  // namespace qplab
