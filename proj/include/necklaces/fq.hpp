#pragma once

#include "necklaces/fp.hpp"
#include "necklaces/gl2.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace necklaces {

// The fixed generator gamma of F_{p^2}^x, recorded by its trace t and norm n:
// F_{p^2} = F_p[X] / (X^2 - t X + n) with gamma the class of X.
struct GammaChoice {
    std::uint32_t p = 0;
    Fp t = 0;
    Fp n = 0;

    bool operator==(const GammaChoice&) const = default;
};

enum class GammaError {
    BadPrime,       // p not an odd prime in range
    OutOfRange,     // t or n not a residue in [0, p)
    ZeroTrace,      // t == 0 (never happens for a generator)
    ZeroNorm,       // n == 0 (gamma would not be invertible)
    Reducible,      // X^2 - tX + n has a root in F_p
    NotGenerator,   // the root has multiplicative order < p^2 - 1
};

class InvalidGamma : public std::invalid_argument {
public:
    InvalidGamma(GammaError code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    GammaError code() const { return code_; }

private:
    GammaError code_;
};

// Element c0 + c1 * gamma of F_{p^2}, relative to a GammaChoice.
struct FqElement {
    Fp c0 = 0, c1 = 0;

    bool operator==(const FqElement&) const = default;
    auto operator<=>(const FqElement&) const = default;
    bool is_zero() const { return c0 == 0 && c1 == 0; }
};

// Validates a (t, n) pair; throws InvalidGamma with the failure reason.
void validate_gamma(const GammaChoice& g);

// Lexicographically smallest valid (t, n) with t >= 1 (deterministic).
GammaChoice find_gamma(std::uint32_t p);
// Validated override.
GammaChoice find_gamma(std::uint32_t p, Fp t, Fp n);

// F_{p^2} arithmetic relative to a validated GammaChoice.
class QuadField {
public:
    explicit QuadField(const GammaChoice& g);

    const GammaChoice& choice() const { return g_; }
    const PrimeField& base() const { return F_; }
    std::uint32_t p() const { return F_.p(); }

    FqElement zero() const { return {0, 0}; }
    FqElement one() const { return {1, 0}; }
    FqElement gamma() const { return {0, 1}; }
    FqElement make(std::int64_t c0, std::int64_t c1) const {
        return {F_.reduce(c0), F_.reduce(c1)};
    }

    FqElement add(const FqElement& x, const FqElement& y) const {
        return {F_.add(x.c0, y.c0), F_.add(x.c1, y.c1)};
    }
    FqElement sub(const FqElement& x, const FqElement& y) const {
        return {F_.sub(x.c0, y.c0), F_.sub(x.c1, y.c1)};
    }
    FqElement neg(const FqElement& x) const { return {F_.neg(x.c0), F_.neg(x.c1)}; }

    FqElement mul(const FqElement& x, const FqElement& y) const;
    FqElement mul_base(Fp a, const FqElement& x) const {
        return {F_.mul(a, x.c0), F_.mul(a, x.c1)};
    }
    FqElement pow(const FqElement& x, std::uint64_t e) const;

    // gamma-conjugate: c0 + c1*gammabar = (c0 + t*c1) - c1*gamma.
    FqElement conj(const FqElement& x) const {
        return {F_.add(x.c0, F_.mul(g_.t, x.c1)), F_.neg(x.c1)};
    }

    Fp norm(const FqElement& x) const;   // x * conj(x), lands in F_p
    Fp trace(const FqElement& x) const;  // x + conj(x)

    // Throws std::domain_error on zero.
    FqElement inv(const FqElement& x) const;

    // Multiplicative order; throws std::domain_error on zero.
    std::uint64_t order(const FqElement& x) const;

    // Matrix of multiplication by beta on F_{p^2} in the basis (1, alpha).
    // With beta = x + y*alpha this is [[x, -n_a*y], [y, x + t_a*y]] where
    // t_a, n_a are the trace and norm of alpha. Requires alpha outside F_p
    // and beta != 0.
    Mat2 i_alpha(const FqElement& beta, const FqElement& alpha) const;

private:
    GammaChoice g_;
    PrimeField F_;
};

}  // namespace necklaces
