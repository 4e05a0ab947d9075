#pragma once

#include "necklaces/fp.hpp"
#include "necklaces/fq.hpp"
#include "necklaces/gl2.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace necklaces {

// A point of P^1(F_p). Points are column classes (x : y); the class (a : 1)
// is the finite point with id a, and (1 : 0) is infinity with id p. The ids
// realize the total order 0 < 1 < ... < p-1 < infinity.
struct ProjPoint {
    std::uint32_t id = 0;

    bool operator==(const ProjPoint&) const = default;
    auto operator<=>(const ProjPoint&) const = default;
};

// An element of PGL_2(F_p): the representative scaled so that the first
// nonzero entry in reading order (a, b, c, d) equals 1. That scaling is
// unique per class, so equality of Pgl values is equality in PGL.
struct Pgl {
    Fp a = 1, b = 0, c = 0, d = 1;

    bool operator==(const Pgl&) const = default;
    auto operator<=>(const Pgl&) const = default;

    // Packs into 60 bits, lexicographic in (a, b, c, d); usable as a hash or
    // sort key since each entry is below 2^15.
    std::uint64_t key() const {
        return (((std::uint64_t(a) << 15 | b) << 15 | c) << 15) | d;
    }
    Mat2 mat() const { return {a, b, c, d}; }
};

struct PglHash {
    std::size_t operator()(const Pgl& g) const { return std::hash<std::uint64_t>()(g.key()); }
};

// P^1(F_p) together with the left PGL_2(F_p) action on column vectors.
class ProjGeom {
public:
    explicit ProjGeom(std::uint32_t p) : F_(p) {}

    const PrimeField& field() const { return F_; }
    std::uint32_t p() const { return F_.p(); }
    std::uint32_t num_points() const { return F_.p() + 1; }

    ProjPoint infinity() const { return {F_.p()}; }
    ProjPoint finite(Fp a) const { return {a % F_.p()}; }
    bool is_infinity(ProjPoint P) const { return P.id == F_.p(); }

    // Representative column (x, y) of the class; finite a -> (a, 1),
    // infinity -> (1, 0).
    std::pair<Fp, Fp> column(ProjPoint P) const {
        return is_infinity(P) ? std::pair<Fp, Fp>{1, 0} : std::pair<Fp, Fp>{P.id, 1};
    }

    // Class of a nonzero column (x, y); throws on the zero vector.
    ProjPoint from_column(Fp x, Fp y) const;

    std::vector<ProjPoint> points() const;

    // --- PGL_2 ---

    Pgl identity() const { return {1, 0, 0, 1}; }
    // Canonical scaling of an invertible matrix; throws on det == 0.
    Pgl canonical(const Mat2& m) const;
    Pgl mul(const Pgl& x, const Pgl& y) const { return canonical(mat2_mul(F_, x.mat(), y.mat())); }
    Pgl inverse(const Pgl& g) const { return canonical(mat2_inv(F_, g.mat())); }
    ProjPoint act(const Pgl& g, ProjPoint P) const;

    // All p(p^2-1) elements, duplicate-free, in lexicographic (a,b,c,d) order.
    std::vector<Pgl> enumerate_pgl() const;

    // --- cross-ratio machinery ---

    // The unique g with g(A) = infinity, g(B) = 0, g(C) = 1; A, B, C must be
    // pairwise distinct.
    Pgl frame_transform(ProjPoint A, ProjPoint B, ProjPoint C) const;

    // [A,B;C,D] = f(D) for the frame transform f of (A, B, C). Defined for
    // every D; D in {A, B, C} yields infinity, 0, 1 respectively.
    ProjPoint cross_ratio(ProjPoint A, ProjPoint B, ProjPoint C, ProjPoint D) const;

    // The unique D with [A,B;C,D] = xi; requires xi outside {0, 1} so that D
    // avoids A, B, C.
    ProjPoint solve_fourth(ProjPoint A, ProjPoint B, ProjPoint C, Fp xi) const;

    // Whether some representative of g has characteristic polynomial
    // X^2 - tX + n, i.e. whether g lies in the conjugacy class C_gamma.
    // Criterion: tr(g) != 0 and tr(g)^2 * n == t^2 * det(g).
    bool in_class_cgamma(const Pgl& g, const GammaChoice& gamma) const;

private:
    PrimeField F_;
};

}  // namespace necklaces
