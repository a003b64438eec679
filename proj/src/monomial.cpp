#include "qplab/monomial.hpp"

#include <algorithm>

namespace qplab {

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > static_cast<size_t>(kMaxVars))
    throw Error(ErrorKind::unsupported, "at most 31 variables are supported");
  Monomial m;
  int deg = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > static_cast<int>(kMaxExponent))
      throw Error(ErrorKind::domain, "exponent out of range");
    m.e_[i] = static_cast<uint16_t>(exps[i]);
    deg += exps[i];
  }
  if (deg > static_cast<int>(kMaxExponent)) throw Error(ErrorKind::domain, "monomial degree overflow");
  m.e_[kDegreeSlot] = static_cast<uint16_t>(deg);
  return m;
}

Monomial Monomial::variable(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw Error(ErrorKind::unsupported, "variable index out of range");
  Monomial m;
  m.e_[i] = static_cast<uint16_t>(power);
  m.e_[kDegreeSlot] = static_cast<uint16_t>(power);
  return m;
}

Monomial Monomial::shifted_down(int from) const {
  Monomial m;
  int deg = 0;
  for (int i = from; i < kMaxVars; ++i) {
    m.e_[i - from] = e_[i];
    deg += e_[i];
  }
  m.e_[kDegreeSlot] = static_cast<uint16_t>(deg);
  return m;
}

Monomial Monomial::shifted_up(int by) const {
  Monomial m;
  for (int i = 0; i + by < kMaxVars; ++i) m.e_[i + by] = e_[i];
  for (int i = kMaxVars - by; i < kMaxVars; ++i)
    if (e_[i]) throw Error(ErrorKind::unsupported, "too many variables after shift");
  m.e_[kDegreeSlot] = e_[kDegreeSlot];
  return m;
}

size_t Monomial::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < 32; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!e_[i]) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e_[i] > 1) out += '^' + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block(" + std::to_string(front_) + ")";
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  if (text.rfind("block(", 0) == 0 && text.back() == ')')
    return block(std::stoi(text.substr(6, text.size() - 7)));
  throw Error(ErrorKind::parse, "unknown monomial order '" + text + "'");
}

namespace {

void enumerate(int nvars, int var, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = remaining;
    out.push_back(Monomial::from_exponents(exps));
    exps[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(nvars, var + 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars <= 0) return out;
  std::vector<int> exps(nvars, 0);
  enumerate(nvars, 0, degree, exps, out);
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, nvars) > 0; });
  return out;
}

uint64_t count_monomials(int nvars, int degree) {
  if (degree < 0 || nvars <= 0) return 0;
  // C(nvars - 1 + degree, degree)
  uint64_t result = 1;
  for (int i = 1; i <= degree; ++i) result = result * (nvars - 1 + i) / i;
  return result;
}

}  // namespace qplab
