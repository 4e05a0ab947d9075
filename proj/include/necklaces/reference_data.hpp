#pragma once

#include "necklaces/fq.hpp"
#include "necklaces/intpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// Published reference values for small primes, embedded for verification.
namespace necklaces::reference {

// Necklace listings for p = 5 (gamma (1,2)) and p = 7 (gamma (1,3)) in their
// published order; entries are point ids with -1 standing for infinity.
// Empty for other p.
const std::vector<std::vector<int>>& necklace_list(std::uint32_t p);

// The gamma these listings were produced with.
std::optional<GammaChoice> listed_gamma(std::uint32_t p);

// Factored characteristic polynomials of the pairing matrix.
bool has_charpoly(std::uint32_t p);
std::vector<std::uint32_t> charpoly_primes();
const std::vector<PolyFactor>& charpoly_factors(std::uint32_t p);

}  // namespace necklaces::reference
