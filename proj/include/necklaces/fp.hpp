#pragma once

#include <cstdint>
#include <vector>

namespace necklaces {

// Residue in [0, p). All arithmetic goes through PrimeField.
using Fp = std::uint32_t;

// Arithmetic modulo an odd prime p with 5 <= p < 2^15, so every product of
// two residues fits in 64 bits with lots of headroom.
class PrimeField {
public:
    // Throws std::invalid_argument unless p is a prime with 5 <= p < 2^15.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    Fp reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Fp>(r < 0 ? r + p_ : r);
    }

    Fp add(Fp a, Fp b) const { Fp s = a + b; return s >= p_ ? s - p_ : s; }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
    Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
    Fp mul(Fp a, Fp b) const {
        return static_cast<Fp>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    Fp pow(Fp a, std::uint64_t e) const;

    // Throws std::domain_error on a == 0.
    Fp inv(Fp a) const;
    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

    // Quadratic residue symbol (a|p) in {-1, 0, 1}.
    int legendre(std::int64_t a) const;
    bool is_square(Fp a) const { return legendre(a) >= 0; }

    // Smallest non-square residue; used as the default epsilon.
    Fp smallest_nonsquare() const;

    static bool is_prime(std::uint32_t n);
    static std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi);

private:
    std::uint32_t p_;
};

}  // namespace necklaces
