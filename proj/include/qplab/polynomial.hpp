#pragma once

#include <span>
#include <string>
#include <vector>

#include "qplab/field.hpp"
#include "qplab/monomial.hpp"

namespace qplab {

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coef;
};

/// Sparse polynomial over F in `nvars` variables. Terms are kept strictly
/// descending in grevlex with no zero coefficients, so equal polynomials
/// have identical term vectors.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  Polynomial(F field, int nvars);

  static Polynomial constant(F field, int nvars, const Elem& c);
  static Polynomial variable(F field, int nvars, int i);
  static Polynomial monomial(F field, int nvars, const Monomial& m, const Elem& c);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(F field, int nvars, std::vector<Term<F>> terms);
  /// Trusts that `terms` are already canonical.
  static Polynomial from_sorted_terms(F field, int nvars, std::vector<Term<F>> terms);

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Degree of the polynomial in the variables [begin, end).
  int partial_degree(int begin, int end) const;

  /// Leading term in grevlex.
  const Term<F>& leading_term() const { return terms_.front(); }
  Term<F> leading_term(const MonomialOrder& order) const;
  Elem coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Elem& c) const;
  Polynomial times_monomial(const Monomial& m, const Elem& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(int var) const;
  Elem evaluate(std::span<const Elem> point) const;

  /// Ring homomorphism x_i -> images[i]; the result lives in the ring of the images.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Scales so the grevlex leading coefficient is 1.
  Polynomial monic() const;
  /// Same polynomial viewed in a ring with `new_nvars` variables, variable i -> i + offset.
  Polynomial relabeled(int offset, int new_nvars) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  F field_;
  int nvars_;
  std::vector<Term<F>> terms_;
};

template <class F>
void check_same_ring(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorKind::field_mismatch, a.field().name() + " vs " + b.field().name());
  if (a.nvars() != b.nvars())
    throw Error(ErrorKind::ring_mismatch,
                std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + " variables");
}

/// Divides `a` by `b`, requiring an exact quotient.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& a, const Polynomial<F>& b);

/// Over Q: rescale to integer coefficients with unit content and positive
/// leading coefficient. Over F_p: make monic.
template <class F>
Polynomial<F> primitive_part(const Polynomial<F>& f);

/// Substitutes x_i -> sum_j m[i][j] x_j. `m` is row-major (n x n).
template <class F>
Polynomial<F> linear_substitution(const Polynomial<F>& f, const std::vector<std::vector<typename F::Elem>>& m);

}  // namespace qplab
