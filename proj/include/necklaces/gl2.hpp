#pragma once

#include "necklaces/fp.hpp"

#include <array>

namespace necklaces {

// A plain 2x2 matrix [[a, b], [c, d]] over F_p, not reduced modulo scalars.
struct Mat2 {
    Fp a = 0, b = 0, c = 0, d = 0;

    bool operator==(const Mat2&) const = default;
};

inline Mat2 mat2_mul(const PrimeField& F, const Mat2& x, const Mat2& y) {
    return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
            F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
            F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
            F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

inline Fp mat2_det(const PrimeField& F, const Mat2& m) {
    return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

inline Fp mat2_trace(const PrimeField& F, const Mat2& m) { return F.add(m.a, m.d); }

// Inverse of an invertible matrix (throws via PrimeField::inv when det == 0).
inline Mat2 mat2_inv(const PrimeField& F, const Mat2& m) {
    Fp di = F.inv(mat2_det(F, m));
    return {F.mul(m.d, di), F.mul(F.neg(m.b), di), F.mul(F.neg(m.c), di), F.mul(m.a, di)};
}

// Matrix * column vector.
inline std::array<Fp, 2> mat2_apply(const PrimeField& F, const Mat2& m, Fp x, Fp y) {
    return {F.add(F.mul(m.a, x), F.mul(m.b, y)), F.add(F.mul(m.c, x), F.mul(m.d, y))};
}

}  // namespace necklaces
