#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qplab/error.hpp"

namespace qplab {

/// Exponent vector in at most kMaxVars variables. Slot kMaxVars holds the
/// total degree so that products and quotients keep it current lane-wise.
class Monomial {
 public:
  static constexpr int kMaxVars = 31;
  static constexpr int kDegreeSlot = 31;
  static constexpr uint32_t kMaxExponent = 0xffff;

  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int i, int power = 1);

  uint16_t operator[](int i) const { return e_[i]; }
  int degree() const { return e_[kDegreeSlot]; }
  bool is_one() const { return e_[kDegreeSlot] == 0; }

  void set(int i, uint16_t value) {
    e_[kDegreeSlot] = static_cast<uint16_t>(e_[kDegreeSlot] - e_[i] + value);
    e_[i] = value;
  }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const {
    bool ok = true;
    for (int i = 0; i < 32; ++i) ok &= e_[i] <= other.e_[i];
    return ok;
  }

  /// Bit i set iff variable i occurs; used as a divisibility prefilter.
  uint32_t support_mask() const {
    uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i) m |= static_cast<uint32_t>(e_[i] != 0) << i;
    return m;
  }

  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] && other.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < 32; ++i) r.e_[i] = static_cast<uint16_t>(a.e_[i] + b.e_[i]);
    if (r.e_[kDegreeSlot] < a.e_[kDegreeSlot])
      throw Error(ErrorKind::domain, "monomial degree overflow");
    return r;
  }

  /// Exact quotient; caller guarantees `b` divides `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < 32; ++i) r.e_[i] = static_cast<uint16_t>(a.e_[i] - b.e_[i]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      deg += r.e_[i];
    }
    r.e_[kDegreeSlot] = static_cast<uint16_t>(deg);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    int deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
      deg += r.e_[i];
    }
    r.e_[kDegreeSlot] = static_cast<uint16_t>(deg);
    return r;
  }

  /// Degree in the variables [begin, end).
  int partial_degree(int begin, int end) const {
    int d = 0;
    for (int i = begin; i < end; ++i) d += e_[i];
    return d;
  }

  int weighted_degree(std::span<const int> weights) const {
    if (weights.empty()) return degree();
    int d = 0;
    for (size_t i = 0; i < weights.size(); ++i) d += weights[i] * e_[i];
    return d;
  }

  /// Largest index with a nonzero exponent, or -1 for 1.
  int last_variable() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e_[i]) return i;
    return -1;
  }

  /// Moves the exponents of variables [from, kMaxVars) down by `from` slots.
  Monomial shifted_down(int from) const;
  /// Moves exponents up by `by` slots (new front variables get exponent 0).
  Monomial shifted_up(int by) const;

  bool operator==(const Monomial& o) const { return std::memcmp(e_.data(), o.e_.data(), sizeof(e_)) == 0; }

  size_t hash() const;
  std::string to_string() const;
  const uint16_t* data() const { return e_.data(); }

 private:
  std::array<uint16_t, 32> e_{};
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// grevlex, lex, or an elimination order: grevlex on the first `front`
/// variables, ties broken by grevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind : uint8_t { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block(int front) { return MonomialOrder(Kind::block, front); }

  Kind kind() const { return kind_; }
  int front() const { return front_; }

  /// Three-way comparison: negative when a < b.
  int compare(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind_) {
      case Kind::grevlex:
        return grevlex_range(a, b, 0, nvars, a.degree(), b.degree());
      case Kind::lex:
        for (int i = 0; i < nvars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::block: {
        int fa = a.partial_degree(0, front_), fb = b.partial_degree(0, front_);
        if (int c = grevlex_range(a, b, 0, front_, fa, fb)) return c;
        return grevlex_range(a, b, front_, nvars, a.degree() - fa, b.degree() - fb);
      }
    }
    return 0;
  }

  std::string name() const;
  static MonomialOrder parse(const std::string& text);

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, int front) : kind_(k), front_(front) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, int begin, int end, int da, int db) {
    if (da != db) return da < db ? -1 : 1;
    for (int i = end - 1; i >= begin; --i)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }

  Kind kind_;
  int front_;
};

/// All monomials of total degree `degree` in `nvars` variables, in
/// descending grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Number of monomials of degree t in n variables.
uint64_t count_monomials(int nvars, int degree);

}  // namespace qplab
