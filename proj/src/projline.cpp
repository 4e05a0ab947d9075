#include "necklaces/projline.hpp"

#include <stdexcept>

namespace necklaces {

ProjPoint ProjGeom::from_column(Fp x, Fp y) const {
    x %= F_.p();
    y %= F_.p();
    if (y != 0) return finite(F_.div(x, y));
    if (x != 0) return infinity();
    throw std::invalid_argument("ProjGeom::from_column: zero vector");
}

std::vector<ProjPoint> ProjGeom::points() const {
    std::vector<ProjPoint> out;
    out.reserve(num_points());
    for (std::uint32_t a = 0; a <= F_.p(); ++a) out.push_back({a});
    return out;
}

Pgl ProjGeom::canonical(const Mat2& m) const {
    if (mat2_det(F_, m) == 0)
        throw std::invalid_argument("ProjGeom::canonical: singular matrix");
    Fp lead = m.a != 0 ? m.a : (m.b != 0 ? m.b : m.c);
    // a = b = c = 0 would force det == 0, so lead is nonzero here.
    Fp s = F_.inv(lead);
    return {F_.mul(m.a, s), F_.mul(m.b, s), F_.mul(m.c, s), F_.mul(m.d, s)};
}

ProjPoint ProjGeom::act(const Pgl& g, ProjPoint P) const {
    auto [x, y] = column(P);
    auto v = mat2_apply(F_, g.mat(), x, y);
    return from_column(v[0], v[1]);
}

std::vector<Pgl> ProjGeom::enumerate_pgl() const {
    const std::uint32_t p = F_.p();
    std::vector<Pgl> out;
    out.reserve(std::size_t(p) * (p * p - 1));
    // a == 0, b == 1: det = -c, so c != 0.
    for (Fp c = 1; c < p; ++c)
        for (Fp d = 0; d < p; ++d) out.push_back({0, 1, c, d});
    // a == 1: det = d - bc, so skip d == bc.
    for (Fp b = 0; b < p; ++b)
        for (Fp c = 0; c < p; ++c) {
            Fp bad = F_.mul(b, c);
            for (Fp d = 0; d < p; ++d)
                if (d != bad) out.push_back({1, b, c, d});
        }
    return out;
}

Pgl ProjGeom::frame_transform(ProjPoint A, ProjPoint B, ProjPoint C) const {
    if (A == B || A == C || B == C)
        throw std::invalid_argument("frame_transform: points must be pairwise distinct");
    auto [ax, ay] = column(A);
    auto [bx, by] = column(B);
    auto [cx, cy] = column(C);
    // Solve (u, v) with u*col(A) + v*col(B) = col(C); then the inverse of
    // [u*col(A) | v*col(B)] sends A, B, C to infinity, 0, 1.
    Mat2 AB{ax, bx, ay, by};
    auto uv = mat2_apply(F_, mat2_inv(F_, AB), cx, cy);
    Mat2 M{F_.mul(uv[0], ax), F_.mul(uv[1], bx), F_.mul(uv[0], ay), F_.mul(uv[1], by)};
    return canonical(mat2_inv(F_, M));
}

ProjPoint ProjGeom::cross_ratio(ProjPoint A, ProjPoint B, ProjPoint C, ProjPoint D) const {
    return act(frame_transform(A, B, C), D);
}

ProjPoint ProjGeom::solve_fourth(ProjPoint A, ProjPoint B, ProjPoint C, Fp xi) const {
    xi %= F_.p();
    if (xi == 0 || xi == 1)
        throw std::invalid_argument("solve_fourth: xi in {0, 1} degenerates to B or C");
    return act(inverse(frame_transform(A, B, C)), finite(xi));
}

bool ProjGeom::in_class_cgamma(const Pgl& g, const GammaChoice& gamma) const {
    Fp tr = mat2_trace(F_, g.mat());
    if (tr == 0) return false;
    Fp det = mat2_det(F_, g.mat());
    // Some scalar multiple has char poly X^2 - tX + n iff tr^2 n == t^2 det.
    return F_.mul(F_.mul(tr, tr), gamma.n) == F_.mul(F_.mul(gamma.t, gamma.t), det);
}

}  // namespace necklaces
