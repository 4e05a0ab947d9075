#include "necklaces/reference_data.hpp"

#include <map>
#include <stdexcept>

namespace necklaces::reference {

namespace {

// -1 stands for the point at infinity.
const std::vector<std::vector<int>> kNecklaces5 = {
    {0, 1, 2, 4, -1, 3}, {0, 1, 3, -1, 2, 4}, {0, 1, 4, 2, 3, -1}, {0, 1, -1, 3, 4, 2},
    {0, 2, 1, -1, 4, 3}, {0, 3, 1, 2, -1, 4}, {0, 3, 2, 1, 4, -1}, {0, 2, 3, 4, 1, -1},
    {0, 2, -1, 1, 3, 4}, {0, 4, 1, 3, 2, -1},
};

const std::vector<std::vector<int>> kNecklaces7 = {
    {0, -1, 2, 3, 5, 1, 4, 6}, {0, 6, 3, 5, -1, 2, 4, 1}, {0, -1, 3, 1, 4, 5, 6, 2},
    {0, -1, 1, 5, 6, 4, 2, 3}, {0, 3, -1, 2, 5, 4, 6, 1}, {0, 3, 4, 5, 1, 6, -1, 2},
    {0, 2, 1, 4, -1, 3, 6, 5}, {0, 2, 3, -1, 5, 6, 1, 4}, {0, 5, 4, -1, 2, 1, 6, 3},
    {0, 5, -1, 1, 6, 2, 3, 4}, {0, 3, 5, 6, -1, 1, 2, 4}, {0, 5, 1, 2, 3, 6, 4, -1},
    {0, 3, 1, -1, 4, 2, 5, 6}, {0, 1, -1, 3, 4, 6, 2, 5}, {0, -1, 5, 4, 2, 6, 3, 1},
    {0, 2, 4, 3, 6, -1, 5, 1}, {0, 6, 2, -1, 1, 4, 3, 5}, {0, 4, -1, 5, 2, 3, 1, 6},
    {0, -1, 6, 2, 1, 3, 5, 4}, {0, 4, 6, -1, 3, 5, 2, 1}, {0, 6, -1, 4, 3, 1, 5, 2},
};

const std::vector<std::vector<int>> kEmpty = {};

IntPoly lin(long c) { return IntPoly{-c, 1}; }  // X - c

std::map<std::uint32_t, std::vector<PolyFactor>> make_charpoly_table() {
    std::map<std::uint32_t, std::vector<PolyFactor>> t;
    t[5] = {{lin(6), 1}, {lin(1), 4}, {lin(4), 5}};
    t[7] = {{lin(12), 1}, {IntPoly{8, -8, 1}, 6}, {lin(3), 8}};
    t[11] = {{lin(30), 1}, {lin(2), 10}, {lin(8), 20}, {IntPoly{5, -10, 1}, 12}};
    t[13] = {{lin(42), 1}, {IntPoly{-1, 83, -19, 1}, 12}, {lin(12), 14}, {lin(4), 27}};
    t[17] = {{lin(72), 1},
             {lin(1), 16},
             {IntPoly{-361, 195, -27, 1}, 16},
             {lin(16), 17},
             {lin(8), 18},
             {IntPoly{32, -16, 1}, 18}};
    t[19] = {{lin(90), 1},
             {lin(18), 18},
             {IntPoly{256, -768, 304, -32, 1}, 18},
             {lin(3), 20},
             {IntPoly{-867, 315, -33, 1}, 20}};
    return t;
}

const std::map<std::uint32_t, std::vector<PolyFactor>>& charpoly_table() {
    static const auto table = make_charpoly_table();
    return table;
}

}  // namespace

const std::vector<std::vector<int>>& necklace_list(std::uint32_t p) {
    if (p == 5) return kNecklaces5;
    if (p == 7) return kNecklaces7;
    return kEmpty;
}

std::optional<GammaChoice> listed_gamma(std::uint32_t p) {
    if (p == 5) return GammaChoice{5, 1, 2};
    if (p == 7) return GammaChoice{7, 1, 3};
    return std::nullopt;
}

bool has_charpoly(std::uint32_t p) { return charpoly_table().count(p) > 0; }

std::vector<std::uint32_t> charpoly_primes() {
    std::vector<std::uint32_t> out;
    for (const auto& [p, _] : charpoly_table()) out.push_back(p);
    return out;
}

const std::vector<PolyFactor>& charpoly_factors(std::uint32_t p) {
    auto it = charpoly_table().find(p);
    if (it == charpoly_table().end())
        throw std::out_of_range("reference: no charpoly factorization for this p");
    return it->second;
}

}  // namespace necklaces::reference
