#pragma once

#include "necklaces/intmat.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace necklaces {

// Dense polynomial over Z, coefficients low to high. Normalized form strips
// trailing zeros; the zero polynomial is the empty vector.
using IntPoly = std::vector<mpz_class>;

IntPoly poly_normalize(IntPoly f);
IntPoly poly_add(const IntPoly& f, const IntPoly& g);
IntPoly poly_sub(const IntPoly& f, const IntPoly& g);
IntPoly poly_mul(const IntPoly& f, const IntPoly& g);
IntPoly poly_pow(const IntPoly& f, unsigned e);
bool poly_equal(const IntPoly& f, const IntPoly& g);

// Renders "X^3 - 19*X^2 + 83*X - 1" style text (variable X, descending).
std::string poly_to_string(const IntPoly& f);

// One factor of a factored polynomial, e.g. (X^2 - 10*X + 5)^12.
struct PolyFactor {
    IntPoly base;
    unsigned mult = 1;
};

IntPoly expand_factors(const std::vector<PolyFactor>& factors);

// Renders "(X - 30)*(X - 2)^10*..." mirroring the published table style.
std::string factors_to_string(const std::vector<PolyFactor>& factors);

// Exact characteristic polynomial det(XI - M) of a square integer matrix,
// monic, low-to-high coefficients. Division-free (Samuelson-Berkowitz) over
// arbitrary-precision integers.
IntPoly charpoly(const IntMat& M);

// Exact rank and determinant by fraction-free (Bareiss) elimination. The
// determinant is reported for square matrices only (0 when rank-deficient).
std::pair<std::size_t, mpz_class> rank_and_det(const IntMat& M);

}  // namespace necklaces
