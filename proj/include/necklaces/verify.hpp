#pragma once

#include "necklaces/correspond.hpp"

#include <optional>
#include <string>
#include <vector>

namespace necklaces {

struct VerifyOptions {
    std::optional<GammaChoice> gamma;  // default: find_gamma(p)
    std::optional<Fp> epsilon;         // default: smallest non-square
    unsigned jobs = 1;                 // worker threads for prime ranges
};

// Suites: chen86, theta, degeneracy, elliptic, genus, merelade, pairing, all.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

std::vector<CheckReport> run_suite(const std::string& suite, std::uint32_t p,
                                   const VerifyOptions& opt = {});

// Runs the suite prime by prime over [pmin, pmax]; results in prime order
// regardless of scheduling.
std::vector<CheckReport> run_suite_range(const std::string& suite, std::uint32_t pmin,
                                         std::uint32_t pmax, const VerifyOptions& opt = {});

}  // namespace necklaces
