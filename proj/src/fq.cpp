#include "necklaces/fq.hpp"

#include <vector>

namespace necklaces {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimeField checked_base(std::uint32_t p) {
    if (p < 5 || p >= (1u << 15) || !PrimeField::is_prime(p))
        throw InvalidGamma(GammaError::BadPrime,
                           "gamma: p must be a prime with 5 <= p < 2^15");
    return PrimeField(p);
}

}  // namespace

void validate_gamma(const GammaChoice& g) {
    QuadField check(g);  // the constructor performs the full validation
    (void)check;
}

// Every QuadField in the program is backed by an actual generator: the
// constructor rejects anything else with a reason code.
QuadField::QuadField(const GammaChoice& g) : g_(g), F_(checked_base(g.p)) {
    if (g_.t >= g_.p || g_.n >= g_.p)
        throw InvalidGamma(GammaError::OutOfRange, "gamma: t, n must lie in [0, p)");
    if (g_.t == 0) throw InvalidGamma(GammaError::ZeroTrace, "gamma: trace must be nonzero");
    if (g_.n == 0) throw InvalidGamma(GammaError::ZeroNorm, "gamma: norm must be nonzero");
    Fp disc = F_.sub(F_.mul(g_.t, g_.t), F_.mul(4 % g_.p, g_.n));
    if (F_.legendre(disc) != -1)
        throw InvalidGamma(GammaError::Reducible, "gamma: X^2 - tX + n is reducible over F_p");
    std::uint64_t full = std::uint64_t(g_.p) * g_.p - 1;
    if (order(gamma()) != full)
        throw InvalidGamma(GammaError::NotGenerator,
                           "gamma: root of X^2 - tX + n does not generate F_{p^2}^x");
    // A generator can never have n == t^2 (else gamma^3 = -t^3 lies in F_p,
    // capping the order at 3(p-1) < p^2-1).
    if (g_.n == F_.mul(g_.t, g_.t))
        throw InvalidGamma(GammaError::NotGenerator, "gamma: n == t^2 is impossible for a generator");
}

FqElement QuadField::mul(const FqElement& x, const FqElement& y) const {
    // (a0 + a1 g)(b0 + b1 g) with g^2 = t g - n.
    Fp a0b0 = F_.mul(x.c0, y.c0);
    Fp a1b1 = F_.mul(x.c1, y.c1);
    Fp cross = F_.add(F_.mul(x.c0, y.c1), F_.mul(x.c1, y.c0));
    return {F_.sub(a0b0, F_.mul(g_.n, a1b1)), F_.add(cross, F_.mul(g_.t, a1b1))};
}

FqElement QuadField::pow(const FqElement& x, std::uint64_t e) const {
    FqElement r = one(), base = x;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fp QuadField::norm(const FqElement& x) const {
    // N(c0 + c1 g) = c0^2 + c0 c1 t + c1^2 n.
    return F_.add(F_.add(F_.mul(x.c0, x.c0), F_.mul(F_.mul(x.c0, x.c1), g_.t)),
                  F_.mul(F_.mul(x.c1, x.c1), g_.n));
}

Fp QuadField::trace(const FqElement& x) const { return F_.add(F_.add(x.c0, x.c0), F_.mul(g_.t, x.c1)); }

FqElement QuadField::inv(const FqElement& x) const {
    if (x.is_zero()) throw std::domain_error("QuadField::inv: inverse of zero");
    Fp d = F_.inv(norm(x));
    return mul_base(d, conj(x));
}

std::uint64_t QuadField::order(const FqElement& x) const {
    if (x.is_zero()) throw std::domain_error("QuadField::order: zero has no order");
    std::uint64_t ord = std::uint64_t(g_.p) * g_.p - 1;
    for (std::uint64_t q : prime_factors(ord)) {
        while (ord % q == 0 && pow(x, ord / q) == one()) ord /= q;
    }
    return ord;
}

Mat2 QuadField::i_alpha(const FqElement& beta, const FqElement& alpha) const {
    if (alpha.c1 == 0)
        throw std::invalid_argument("i_alpha: alpha must lie outside F_p");
    if (beta.is_zero())
        throw std::invalid_argument("i_alpha: beta must be nonzero");
    Fp ta = trace(alpha), na = norm(alpha);
    // beta = x + y*alpha in the basis (1, alpha).
    Fp y = F_.div(beta.c1, alpha.c1);
    Fp x = F_.sub(beta.c0, F_.mul(y, alpha.c0));
    return {x, F_.neg(F_.mul(na, y)), y, F_.add(x, F_.mul(ta, y))};
}

GammaChoice find_gamma(std::uint32_t p) {
    checked_base(p);
    for (Fp t = 1; t < p; ++t) {
        for (Fp n = 1; n < p; ++n) {
            try {
                QuadField K(GammaChoice{p, t, n});
                return K.choice();
            } catch (const InvalidGamma&) {
                continue;
            }
        }
    }
    throw std::logic_error("find_gamma: no generator found");  // unreachable
}

GammaChoice find_gamma(std::uint32_t p, Fp t, Fp n) {
    QuadField K(GammaChoice{p, t, n});  // throws InvalidGamma on a bad override
    return K.choice();
}

}  // namespace necklaces
