#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qplab/polynomial.hpp"

namespace qplab {

/// Parses `3*x0^2*x4 - x1*x2`-style text. Coefficients are integers or a/b,
/// variables x0..x{nvars-1}; anything after `#` is ignored.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const F& field, int nvars);

/// Parses `[a0:a1:...:ar]` into field elements.
template <class F>
std::vector<typename F::Elem> parse_point(std::string_view text, const F& field);

mpq_class parse_rational(std::string_view text);

/// Strips a trailing `#` comment and surrounding whitespace.
std::string_view strip_comment(std::string_view line);
std::string_view trim(std::string_view s);

template <class F>
std::string point_to_string(const std::vector<typename F::Elem>& pt, const F& field) {
  std::string out = "[";
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) out += ':';
    out += field.to_string(pt[i]);
  }
  return out + "]";
}

}  // namespace qplab
