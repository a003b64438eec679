#include "qplab/field.hpp"

#include <charconv>

namespace qplab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::field_mismatch: return "field-mismatch";
    case ErrorKind::domain: return "domain";
    case ErrorKind::invalid_coordinate_change: return "invalid-coordinate-change";
    case ErrorKind::empty_variety: return "empty-variety";
    case ErrorKind::indeterminacy: return "indeterminacy";
    case ErrorKind::no_sampler: return "no-sampler";
    case ErrorKind::sampling_failure: return "sampling-failure";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::bad_basepoint: return "bad-basepoint";
    case ErrorKind::non_embedding: return "non-embedding";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::genericity_failure: return "genericity-failure";
    case ErrorKind::containment: return "containment";
    case ErrorKind::rank: return "rank";
    case ErrorKind::membership: return "membership";
    case ErrorKind::nondegeneracy: return "nondegeneracy";
    case ErrorKind::extraction_failure: return "extraction-failure";
    case ErrorKind::bad_container: return "bad-container";
    case ErrorKind::totally_real_required: return "totally-real-required";
    case ErrorKind::input_contract: return "input-contract";
    case ErrorKind::parse: return "parse";
    case ErrorKind::usage: return "usage";
    case ErrorKind::unsupported: return "unsupported";
  }
  return "unknown";
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::domain, "characteristic must be an odd prime below 2^31, got " +
                                       std::to_string(p));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::domain, "division by zero in " + name());
  int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::pow(Elem a, uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::from_int(int64_t v) const {
  int64_t m = v % static_cast<int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den < 0) den += p_;
  if (den == 0)
    throw Error(ErrorKind::domain, "denominator " + q.get_den().get_str() + " vanishes in " + name());
  return div(static_cast<Elem>(num.get_ui()), static_cast<Elem>(den.get_ui()));
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::domain, "division by zero in QQ");
  return Elem(1) / a;
}

RationalField::Elem RationalField::pow(const Elem& a, uint64_t e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), e);
  Elem r(num, den);
  r.canonicalize();
  return r;
}

FieldConfig FieldConfig::parse(std::string_view text) {
  if (text == "QQ" || text == "q" || text == "Q" || text == "0" || text == "rationals")
    return rationals();
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == 'p' || digits.front() == 'P')) digits.remove_prefix(1);
  uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(ErrorKind::parse, "unrecognized field '" + std::string(text) + "'");
  if (p < 3 || p >= (1ull << 31) || !is_prime(p))
    throw Error(ErrorKind::domain, "field characteristic must be 0 or an odd prime: " + std::string(text));
  return prime(static_cast<uint32_t>(p));
}

std::string FieldConfig::name() const {
  return kind == Kind::rationals ? "QQ" : "p" + std::to_string(characteristic);
}

}  // namespace qplab
