#include "necklaces/necklace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace necklaces {

OrientedNecklace::OrientedNecklace(std::vector<ProjPoint> cycle) : pearls_(std::move(cycle)) {
    if (pearls_.empty()) throw std::invalid_argument("OrientedNecklace: empty cycle");
    auto min_it = std::min_element(pearls_.begin(), pearls_.end());
    std::rotate(pearls_.begin(), min_it, pearls_.end());
    auto sorted = pearls_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("OrientedNecklace: repeated pearl");
}

OrientedNecklace reverse(const OrientedNecklace& v) {
    std::vector<ProjPoint> r(v.pearls().rbegin(), v.pearls().rend());
    return OrientedNecklace(std::move(r));
}

Necklace::Necklace(const OrientedNecklace& v) {
    OrientedNecklace w = reverse(v);
    rep_ = v < w ? v : w;
}

PointPair make_pair_sorted(ProjPoint A, ProjPoint B) {
    if (A == B) throw std::invalid_argument("PointPair: points must be distinct");
    return A < B ? PointPair{A, B} : PointPair{B, A};
}

std::vector<PointPair> antipodal_pairs(const OrientedNecklace& v) {
    const std::size_t m = v.size();
    const std::size_t half = m / 2;
    std::vector<PointPair> out;
    out.reserve(half);
    for (std::size_t i = 0; i < half; ++i)
        out.push_back(make_pair_sorted(v.pearls()[i], v.pearls()[i + half]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PointPair> antipodal_pairs(const Necklace& v) { return antipodal_pairs(v.rep()); }

Fp NecklaceSystem::xi() const {
    const PrimeField& F = geom_.field();
    const GammaChoice& g = gamma();
    Fp t2 = F.mul(g.t, g.t);
    return F.div(t2, F.sub(t2, g.n));  // t^2 - n != 0 for any generator
}

Pgl NecklaceSystem::turning_element(ProjPoint C0, ProjPoint C1, ProjPoint C2) const {
    if (C0 == C1 || C0 == C2 || C1 == C2)
        throw std::invalid_argument("turning_element: points must be pairwise distinct");
    const PrimeField& F = geom_.field();
    const GammaChoice& g = gamma();
    auto [ux, uy] = geom_.column(C0);
    auto [vx, vy] = geom_.column(C1);
    auto [wx, wy] = geom_.column(C2);
    // Write col(C2) = a*col(C0) + b*col(C1); in the basis (col(C0), col(C1))
    // the turning element is [[0, a], [lam, b]] with the unique lam putting
    // the class into C_gamma: tr^2 n = t^2 det gives lam = -b^2 n / (t^2 a).
    Mat2 T{ux, vx, uy, vy};
    auto ab = mat2_apply(F, mat2_inv(F, T), wx, wy);
    Fp a = ab[0], b = ab[1];  // both nonzero since C2 avoids C0, C1
    Fp lam = F.neg(F.div(F.mul(F.mul(b, b), g.n), F.mul(F.mul(g.t, g.t), a)));
    Mat2 hB{0, a, lam, b};
    Pgl h = geom_.canonical(mat2_mul(F, mat2_mul(F, T, hB), mat2_inv(F, T)));
    if (!geom_.in_class_cgamma(h, g))
        throw std::logic_error("turning_element: constructed class not in C_gamma");
    return h;
}

OrientedNecklace NecklaceSystem::build_from_triple(ProjPoint C0, ProjPoint C1,
                                                   ProjPoint C2) const {
    Pgl h = turning_element(C0, C1, C2);
    std::vector<ProjPoint> seq{C0, C1, C2};
    seq.reserve(p() + 1);
    ProjPoint cur = C2;
    while (seq.size() < p() + 1) {
        cur = geom_.act(h, cur);
        seq.push_back(cur);
    }
    return OrientedNecklace(std::move(seq));
}

OrientedNecklace NecklaceSystem::build_from_triple_recurrence(ProjPoint C0, ProjPoint C1,
                                                              ProjPoint C2) const {
    std::vector<ProjPoint> seq{C0, C1, C2};
    seq.reserve(p() + 1);
    const Fp x = xi();
    while (seq.size() < p() + 1) {
        std::size_t k = seq.size();
        seq.push_back(geom_.solve_fourth(seq[k - 3], seq[k - 2], seq[k - 1], x));
    }
    return OrientedNecklace(std::move(seq));
}

OrientedNecklace NecklaceSystem::orbit_of(const Pgl& h) const {
    if (!geom_.in_class_cgamma(h, gamma()))
        throw std::invalid_argument("orbit_of: element not in C_gamma");
    std::vector<ProjPoint> seq;
    seq.reserve(p() + 1);
    ProjPoint cur = geom_.finite(0);
    for (std::uint32_t i = 0; i <= p(); ++i) {
        seq.push_back(cur);
        cur = geom_.act(h, cur);
    }
    return OrientedNecklace(std::move(seq));
}

std::vector<OrientedNecklace> NecklaceSystem::enumerate_oriented() const {
    std::vector<OrientedNecklace> out;
    out.reserve(std::size_t(p()) * (p() - 1));
    for (const Pgl& g : geom_.enumerate_pgl())
        if (geom_.in_class_cgamma(g, gamma())) out.push_back(orbit_of(g));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("enumerate_oriented: C_gamma -> necklace map not injective");
    return out;
}

std::vector<OrientedNecklace> NecklaceSystem::enumerate_oriented_recurrence() const {
    std::vector<OrientedNecklace> out;
    auto pts = geom_.points();
    for (ProjPoint A : pts)
        for (ProjPoint B : pts) {
            if (B == A) continue;
            for (ProjPoint C : pts) {
                if (C == A || C == B) continue;
                out.push_back(build_from_triple_recurrence(A, B, C));
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Necklace> NecklaceSystem::enumerate_necklaces() const {
    std::vector<Necklace> out;
    out.reserve(std::size_t(p()) * (p() - 1) / 2);
    for (const OrientedNecklace& v : enumerate_oriented()) out.push_back(Necklace(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OrientedNecklace NecklaceSystem::apply(const Pgl& g, const OrientedNecklace& v) const {
    std::vector<ProjPoint> seq;
    seq.reserve(v.size());
    for (ProjPoint P : v.pearls()) seq.push_back(geom_.act(g, P));
    return OrientedNecklace(std::move(seq));
}

StabilizerStatus NecklaceSystem::stabilizer_status(const Pgl& g, const Necklace& v) const {
    OrientedNecklace image = apply(g, v.rep());
    if (image == v.rep()) return StabilizerStatus::FixedPreservingOrientation;
    if (image == reverse(v.rep())) return StabilizerStatus::Flipped;
    return StabilizerStatus::Moved;
}

Fq2Point NecklaceSystem::merelade(const OrientedNecklace& v) const {
    const PrimeField& F = geom_.field();
    auto [ux, uy] = geom_.column(v.pearls()[0]);
    auto [qx, qy] = geom_.column(v.pearls()[1]);
    auto [rx, ry] = geom_.column(v.pearls()[2]);
    // Scale representatives P = a*col(C0), Q = b*col(C1) so that
    // -n P + t Q = col(C2); then return <P*(-gamma) + Q>.
    Mat2 T{ux, qx, uy, qy};
    auto cd = mat2_apply(F, mat2_inv(F, T), rx, ry);
    const GammaChoice& g = gamma();
    Fp a = F.neg(F.div(cd[0], g.n));  // -n a = c
    Fp b = F.div(cd[1], g.t);         //  t b = d
    // Component i of P*(-gamma) + Q is (b * Q_i) - (a * P_i) * gamma.
    FqElement wx{F.mul(b, qx), F.neg(F.mul(a, ux))};
    FqElement wy{F.mul(b, qy), F.neg(F.mul(a, uy))};
    if (wy.is_zero())
        throw std::logic_error("merelade: degenerate image");  // impossible for distinct C0, C1
    Fq2Point out{false, quad_.mul(wx, quad_.inv(wy))};
    if (out.value.c1 == 0)
        throw std::logic_error("merelade: image landed in P^1(F_p)");
    return out;
}

Fq2Point NecklaceSystem::act(const Pgl& g, const Fq2Point& pt) const {
    FqElement x = pt.infinite ? quad_.one() : pt.value;
    FqElement y = pt.infinite ? quad_.zero() : quad_.one();
    FqElement xx = quad_.add(quad_.mul_base(g.a, x), quad_.mul_base(g.b, y));
    FqElement yy = quad_.add(quad_.mul_base(g.c, x), quad_.mul_base(g.d, y));
    if (yy.is_zero()) return {true, {}};
    return {false, quad_.mul(xx, quad_.inv(yy))};
}

std::uint64_t discrete_log(const QuadField& K, const FqElement& base, const FqElement& target) {
    if (base.is_zero() || target.is_zero())
        throw std::domain_error("discrete_log: arguments must be nonzero");
    const std::uint64_t ord = std::uint64_t(K.p()) * K.p() - 1;
    const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(double(ord))));
    auto pack = [](const FqElement& x) { return (std::uint64_t(x.c0) << 32) | x.c1; };
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m * 2);
    FqElement cur = K.one();
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(pack(cur), j);
        cur = K.mul(cur, base);
    }
    FqElement giant = K.inv(K.pow(base, m));
    FqElement y = target;
    for (std::uint64_t i = 0; i * m <= ord; ++i) {
        auto it = baby.find(pack(y));
        if (it != baby.end()) return (i * m + it->second) % ord;
        y = K.mul(y, giant);
    }
    throw std::domain_error("discrete_log: target not in <base>");
}

namespace {

Fp sqrt_mod(const PrimeField& F, Fp a) {
    for (Fp r = 0; r < F.p(); ++r)
        if (F.mul(r, r) == a) return r;
    throw std::domain_error("sqrt_mod: not a square");
}

// gamma' expressed inside F_p[gamma]: the two roots of X^2 - t'X + n'.
std::pair<FqElement, FqElement> embedded_roots(const QuadField& from, const GammaChoice& to) {
    const PrimeField& F = from.base();
    const GammaChoice& g = from.choice();
    Fp disc_to = F.sub(F.mul(to.t, to.t), F.mul(4 % F.p(), to.n));
    Fp disc_from = F.sub(F.mul(g.t, g.t), F.mul(4 % F.p(), g.n));
    // z = z0 + z1*gamma with z^2 = disc_to needs z0 = -t z1 / 2 and
    // z1^2 = 4 disc_to / disc_from (a ratio of two non-squares, so a square).
    Fp z1 = sqrt_mod(F, F.div(F.mul(4 % F.p(), disc_to), disc_from));
    Fp z0 = F.neg(F.div(F.mul(g.t, z1), 2));
    FqElement z{z0, z1};
    Fp half = F.inv(2);
    FqElement root1 = from.mul_base(half, from.add(from.make(to.t, 0), z));
    FqElement root2 = from.mul_base(half, from.sub(from.make(to.t, 0), z));
    return {root1, root2};
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = std::int64_t(m), new_r = std::int64_t(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("inverse_mod: arguments not coprime");
    return std::uint64_t(t < 0 ? t + std::int64_t(m) : t);
}

bool choice_less(const GammaChoice& a, const GammaChoice& b) {
    return a.t < b.t || (a.t == b.t && a.n < b.n);
}

// The exponent k with gamma_to = gamma_from^k, chosen so that the two
// directions of a pair are exact inverses: the lexicographically smaller
// choice uses the smaller embedded root, the other direction the inverse
// exponent.
std::uint64_t canonical_exponent(const QuadField& from, const QuadField& to) {
    const std::uint64_t ord = std::uint64_t(from.p()) * from.p() - 1;
    if (from.choice() == to.choice()) return 1;
    if (choice_less(from.choice(), to.choice())) {
        auto [r1, r2] = embedded_roots(from, to.choice());
        FqElement delta = r1 < r2 ? r1 : r2;
        std::uint64_t k = discrete_log(from, from.gamma(), delta);
        if (std::gcd(k, ord) != 1)
            throw std::logic_error("rebase_gamma: exponent not coprime to p^2 - 1");
        return k;
    }
    return inverse_mod(canonical_exponent(to, from), ord);
}

}  // namespace

OrientedNecklace rebase_gamma(const OrientedNecklace& v, const QuadField& from,
                              const QuadField& to) {
    if (from.p() != to.p())
        throw std::invalid_argument("rebase_gamma: fields must share the same p");
    const std::uint64_t k = canonical_exponent(from, to);
    const std::size_t m = v.size();
    std::vector<ProjPoint> seq;
    seq.reserve(m);
    for (std::size_t j = 0; j < m; ++j) seq.push_back(v.pearls()[(j * (k % m)) % m]);
    return OrientedNecklace(std::move(seq));
}

Necklace rebase_gamma(const Necklace& v, const QuadField& from, const QuadField& to) {
    return Necklace(rebase_gamma(v.rep(), from, to));
}

std::size_t index_of(const std::vector<Necklace>& sorted, const Necklace& v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || !(*it == v))
        throw std::out_of_range("index_of: necklace not in list");
    return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace necklaces
