#include "necklaces/fp.hpp"

#include <stdexcept>
#include <string>

namespace necklaces {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 5 || p >= (1u << 15) || !is_prime(p))
        throw std::invalid_argument("PrimeField: p must be a prime with 5 <= p < 2^15, got " +
                                    std::to_string(p));
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
    std::uint64_t base = a % p_, r = 1;
    while (e) {
        if (e & 1) r = (r * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return static_cast<Fp>(r);
}

Fp PrimeField::inv(Fp a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField::inv: inverse of zero");
    return pow(a % p_, p_ - 2);
}

int PrimeField::legendre(std::int64_t a) const {
    Fp r = reduce(a);
    if (r == 0) return 0;
    return pow(r, (p_ - 1) / 2) == 1 ? 1 : -1;
}

Fp PrimeField::smallest_nonsquare() const {
    for (Fp a = 2; a < p_; ++a)
        if (legendre(a) == -1) return a;
    throw std::logic_error("PrimeField: no non-square found");  // unreachable for p >= 3
}

bool PrimeField::is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> PrimeField::primes_in(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

}  // namespace necklaces
