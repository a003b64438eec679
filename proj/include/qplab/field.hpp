#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

#include "qplab/error.hpp"

namespace qplab {

bool is_prime(uint64_t n);

/// Z/pZ for an odd prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = uint32_t;
  static constexpr uint32_t kDefaultCharacteristic = 32003;
  static constexpr uint32_t kConfirmationCharacteristic = 30011;

  explicit PrimeField(uint32_t p = kDefaultCharacteristic);

  uint32_t characteristic() const { return p_; }
  std::string name() const { return "p" + std::to_string(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t e) const;

  Elem from_int(int64_t v) const;
  Elem from_rational(const mpq_class& q) const;
  /// Uniform element from 64 random bits.
  Elem from_random(uint64_t bits) const { return static_cast<Elem>(bits % p_); }

  /// Symmetric representative in (-p/2, p/2].
  int64_t to_signed(Elem a) const {
    return a > p_ / 2 ? static_cast<int64_t>(a) - p_ : static_cast<int64_t>(a);
  }
  std::string to_string(Elem a) const { return std::to_string(to_signed(a)); }
  bool is_negative_repr(Elem a) const { return a > p_ / 2; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

/// The rationals, backed by GMP.
class RationalField {
 public:
  using Elem = mpq_class;

  uint32_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  Elem pow(const Elem& a, uint64_t e) const;

  Elem from_int(int64_t v) const { return Elem(static_cast<long>(v)); }
  Elem from_rational(const mpq_class& q) const { return q; }
  /// Small integer in [-32, 32]; keeps exact computations over Q tame.
  Elem from_random(uint64_t bits) const {
    return Elem(static_cast<long>(bits % 65) - 32);
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  bool is_negative_repr(const Elem& a) const { return sgn(a) < 0; }

  bool operator==(const RationalField&) const { return true; }
};

/// Runtime description of the coefficient field used by a computation.
struct FieldConfig {
  enum class Kind { rationals, prime };

  Kind kind = Kind::prime;
  uint32_t characteristic = PrimeField::kDefaultCharacteristic;

  static FieldConfig rationals() { return {Kind::rationals, 0}; }
  static FieldConfig prime(uint32_t p) { return {Kind::prime, p}; }
  /// Accepts "p32003", "32003", "QQ", "q", "0".
  static FieldConfig parse(std::string_view text);

  std::string name() const;
  bool operator==(const FieldConfig&) const = default;
};

template <class Fn>
decltype(auto) dispatch_field(const FieldConfig& cfg, Fn&& fn) {
  if (cfg.kind == FieldConfig::Kind::rationals) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{cfg.characteristic});
}

inline FieldConfig config_of(const PrimeField& f) { return FieldConfig::prime(f.characteristic()); }
inline FieldConfig config_of(const RationalField&) { return FieldConfig::rationals(); }

template <class F>
inline constexpr bool is_prime_field_v = std::is_same_v<F, PrimeField>;

}  // namespace qplab
