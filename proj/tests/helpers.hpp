#pragma once

#include <string>
#include <vector>

#include "qplab/groebner.hpp"
#include "qplab/parse.hpp"

namespace qplab::test {

template <class F>
Polynomial<F> P(const std::string& text, int nvars, const F& field = F{}) {
  return parse_polynomial(text, field, nvars);
}

template <class F>
Ideal<F> make_ideal(const std::vector<std::string>& gens, int nvars, const F& field = F{}) {
  std::vector<Polynomial<F>> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, field, nvars));
  return Ideal<F>(field, nvars, std::move(polys));
}

template <class F>
Ideal<F> twisted_cubic(const F& field = F{}) {
  return make_ideal<F>({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}, 4, field);
}

}  // namespace qplab::test
