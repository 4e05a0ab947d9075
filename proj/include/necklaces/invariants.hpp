#pragma once

#include "necklaces/correspond.hpp"
#include "necklaces/necklace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace necklaces {

struct EllipticCounts {
    std::int64_t e2 = 0;       // oriented necklaces fixed by the order-2 class
    std::int64_t e3 = 0;       // oriented necklaces fixed by the order-3 class
    std::int64_t e2_plus = 0;  // necklaces fixed or flipped by the order-2 class
    std::int64_t e3_plus = 0;  // necklaces fixed or flipped by the order-3 class
};

// The canonical automorphism images: [0,-1;1,0] (square -I) and [0,-1;1,1]
// (char poly X^2 - X + 1).
Pgl order_two_class(const ProjGeom& geom);
Pgl order_three_class(const ProjGeom& geom);

// Exhaustive scan over all oriented necklaces / necklaces.
EllipticCounts count_elliptic_bruteforce(const NecklaceSystem& sys);
// Same scan with the canonical elements replaced by given conjugates.
EllipticCounts count_elliptic_bruteforce(const NecklaceSystem& sys, const Pgl& g2,
                                         const Pgl& g3);

// Legendre-symbol closed forms.
EllipticCounts count_elliptic_closed(std::uint32_t p);

enum class CurveTag { Xnsp, XnspPlus, X0, XspPlus };

std::string curve_name(CurveTag tag);

struct CurveInvariants {
    CurveTag curve = CurveTag::Xnsp;
    std::int64_t degree = 0;  // over the j-line
    std::int64_t e2 = 0;
    std::int64_t e3 = 0;
    std::int64_t e_inf = 0;   // cusps
    std::int64_t genus = 0;
};

// Degrees, elliptic point counts, cusp counts and genus; the genus of the
// non-split curves is computed both by Riemann-Hurwitz and by the closed
// form, which must agree (throws std::logic_error otherwise).
CurveInvariants curve_invariants(std::uint32_t p, CurveTag tag);

std::int64_t genus_closed_form(std::uint32_t p, CurveTag tag);

// 12(g-1) + 3 e2 + 4 e3 + 6 e_inf = d solved for g; throws if not integral.
std::int64_t genus_riemann_hurwitz(std::int64_t d, std::int64_t e2, std::int64_t e3,
                                   std::int64_t e_inf);

// g(XnspPlus) + g(X0) = g(XspPlus) over every prime in [pmin, pmax].
CheckReport verify_genus_relation(std::uint32_t pmin, std::uint32_t pmax);

// Brute-force counts equal closed forms (single prime).
CheckReport verify_elliptic_counts(const NecklaceSystem& sys);

// The two order-2 flip characterizations: for p = 1 mod 4 the flipped
// necklaces are exactly those with the two fixed points antipodal; for
// p = 3 mod 4 the antipode-of-A map is a bijection onto the non-square
// cross-ratio locus, of size (p+1)/2.
CheckReport verify_flipped_lemmas(const NecklaceSystem& sys);

}  // namespace necklaces
