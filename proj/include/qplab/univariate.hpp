#pragma once

#include <cstdint>
#include <vector>

#include "qplab/field.hpp"
#include "qplab/rng.hpp"

namespace qplab {

/// Dense univariate polynomials over Z/pZ, ascending coefficients, no
/// trailing zeros (the zero polynomial is empty).
using UPoly = std::vector<uint32_t>;

UPoly upoly_trim(UPoly a);
UPoly upoly_mul(const PrimeField& K, const UPoly& a, const UPoly& b);
UPoly upoly_sub(const PrimeField& K, const UPoly& a, const UPoly& b);
/// Remainder of a modulo b (b nonzero).
UPoly upoly_mod(const PrimeField& K, UPoly a, const UPoly& b);
UPoly upoly_gcd(const PrimeField& K, UPoly a, UPoly b);
uint32_t upoly_eval(const PrimeField& K, const UPoly& a, uint32_t x);

/// All distinct roots in Z/pZ, sorted ascending.
std::vector<uint32_t> upoly_roots(const PrimeField& K, const UPoly& f, Rng& rng);

}  // namespace qplab
