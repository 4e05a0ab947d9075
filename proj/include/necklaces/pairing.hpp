#pragma once

#include "necklaces/intmat.hpp"
#include "necklaces/intpoly.hpp"
#include "necklaces/necklace.hpp"

#include <string>
#include <vector>

namespace necklaces {

// Number of antipodal pairs the two necklaces share. Diagonal value (p+1)/2;
// off-diagonal values 0 or 1.
std::int64_t pairing_value(const Necklace& v, const Necklace& w);

// Symmetric Gram matrix over a sorted necklace list.
IntMat pairing_matrix(const std::vector<Necklace>& sorted_necklaces);

struct CharpolyCheck {
    std::uint32_t p = 0;
    bool supported = false;  // reference factorization available for this p
    bool pass = false;
    IntPoly computed;
    IntPoly expected;        // empty when unsupported
    std::string factored;    // printed factored form, empty when unsupported
    std::string detail;      // first mismatching coefficient when failing
};

// Expands the embedded factored reference polynomial for p and compares it
// coefficient-by-coefficient with charpoly(pairing_matrix).
CharpolyCheck verify_charpoly_table(const NecklaceSystem& sys);

}  // namespace necklaces
