#include "necklaces/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace necklaces {

Pgl order_two_class(const ProjGeom& geom) {
    return geom.canonical(Mat2{0, geom.field().neg(1), 1, 0});
}

Pgl order_three_class(const ProjGeom& geom) {
    return geom.canonical(Mat2{0, geom.field().neg(1), 1, 1});
}

EllipticCounts count_elliptic_bruteforce(const NecklaceSystem& sys) {
    return count_elliptic_bruteforce(sys, order_two_class(sys.geom()),
                                     order_three_class(sys.geom()));
}

EllipticCounts count_elliptic_bruteforce(const NecklaceSystem& sys, const Pgl& g2,
                                         const Pgl& g3) {
    EllipticCounts c;
    for (const OrientedNecklace& v : sys.enumerate_oriented()) {
        if (sys.apply(g2, v) == v) ++c.e2;
        if (sys.apply(g3, v) == v) ++c.e3;
    }
    for (const Necklace& v : sys.enumerate_necklaces()) {
        if (sys.stabilizer_status(g2, v) != StabilizerStatus::Moved) ++c.e2_plus;
        if (sys.stabilizer_status(g3, v) != StabilizerStatus::Moved) ++c.e3_plus;
    }
    return c;
}

EllipticCounts count_elliptic_closed(std::uint32_t p) {
    PrimeField F(p);
    std::int64_t a = F.legendre(-1), b = F.legendre(-3);
    return {1 - a, 1 - b, std::int64_t(p + 1) / 2 - a, (1 - b) / 2};
}

std::string curve_name(CurveTag tag) {
    switch (tag) {
        case CurveTag::Xnsp: return "Xnsp";
        case CurveTag::XnspPlus: return "Xnsp+";
        case CurveTag::X0: return "X0";
        case CurveTag::XspPlus: return "Xsp+";
    }
    throw std::invalid_argument("curve_name: unknown tag");
}

std::int64_t genus_closed_form(std::uint32_t p, CurveTag tag) {
    PrimeField F(p);
    std::int64_t P = p, a = F.legendre(-1), b = F.legendre(-3), num = 0, den = 1;
    switch (tag) {
        case CurveTag::Xnsp:
            num = P * P - 7 * P + 11 + 3 * a + 4 * b;
            den = 12;
            break;
        case CurveTag::XnspPlus:
            num = P * P - 10 * P + 23 + 6 * a + 4 * b;
            den = 24;
            break;
        case CurveTag::X0:
            num = P - 6 - 3 * a - 4 * b;
            den = 12;
            break;
        case CurveTag::XspPlus:
            num = P * P - 8 * P + 11 - 4 * b;
            den = 24;
            break;
    }
    if (num % den != 0) throw std::logic_error("genus_closed_form: non-integral genus");
    return num / den;
}

std::int64_t genus_riemann_hurwitz(std::int64_t d, std::int64_t e2, std::int64_t e3,
                                   std::int64_t e_inf) {
    std::int64_t num = d - 3 * e2 - 4 * e3 - 6 * e_inf + 12;
    if (num % 12 != 0) throw std::logic_error("genus_riemann_hurwitz: non-integral genus");
    return num / 12;
}

CurveInvariants curve_invariants(std::uint32_t p, CurveTag tag) {
    PrimeField F(p);
    std::int64_t P = p, a = F.legendre(-1), b = F.legendre(-3);
    CurveInvariants ci;
    ci.curve = tag;
    switch (tag) {
        case CurveTag::Xnsp:
            ci.degree = P * (P - 1);
            ci.e2 = 1 - a;
            ci.e3 = 1 - b;
            ci.e_inf = P - 1;
            break;
        case CurveTag::XnspPlus:
            ci.degree = P * (P - 1) / 2;
            ci.e2 = (P + 1) / 2 - a;
            ci.e3 = (1 - b) / 2;
            ci.e_inf = (P - 1) / 2;
            break;
        case CurveTag::X0:
            ci.degree = P + 1;
            ci.e2 = 1 + a;
            ci.e3 = 1 + b;
            ci.e_inf = 2;
            break;
        case CurveTag::XspPlus:
            ci.degree = P * (P + 1) / 2;
            ci.e2 = (P + 1) / 2;
            ci.e3 = (1 + b) / 2;
            ci.e_inf = (P - 1) / 2 + 1;
            break;
    }
    ci.genus = genus_closed_form(p, tag);
    if (tag == CurveTag::Xnsp || tag == CurveTag::XnspPlus) {
        std::int64_t rh = genus_riemann_hurwitz(ci.degree, ci.e2, ci.e3, ci.e_inf);
        if (rh != ci.genus)
            throw std::logic_error("curve_invariants: Riemann-Hurwitz and closed form disagree");
    }
    return ci;
}

CheckReport verify_genus_relation(std::uint32_t pmin, std::uint32_t pmax) {
    CheckReport r{"genus_relation", pmax, std::nullopt, true, ""};
    for (std::uint32_t p : PrimeField::primes_in(std::max(pmin, 5u), pmax)) {
        std::int64_t lhs =
            genus_closed_form(p, CurveTag::XnspPlus) + genus_closed_form(p, CurveTag::X0);
        std::int64_t rhs = genus_closed_form(p, CurveTag::XspPlus);
        if (lhs != rhs) {
            r.pass = false;
            std::ostringstream os;
            os << "p=" << p << ": g(Xnsp+)+g(X0) = " << lhs << " but g(Xsp+) = " << rhs;
            r.detail = os.str();
            return r;
        }
    }
    return r;
}

CheckReport verify_elliptic_counts(const NecklaceSystem& sys) {
    CheckReport r{"elliptic_counts", sys.p(), sys.gamma(), true, ""};
    EllipticCounts brute = count_elliptic_bruteforce(sys);
    EllipticCounts closed = count_elliptic_closed(sys.p());
    if (brute.e2 != closed.e2 || brute.e3 != closed.e3 || brute.e2_plus != closed.e2_plus ||
        brute.e3_plus != closed.e3_plus) {
        r.pass = false;
        std::ostringstream os;
        os << "brute (" << brute.e2 << "," << brute.e3 << "," << brute.e2_plus << ","
           << brute.e3_plus << ") vs closed (" << closed.e2 << "," << closed.e3 << ","
           << closed.e2_plus << "," << closed.e3_plus << ")";
        r.detail = os.str();
    }
    return r;
}

namespace {

ProjPoint antipode_of(const Necklace& v, ProjPoint A) {
    const auto& pearls = v.rep().pearls();
    const std::size_t m = pearls.size();
    auto it = std::find(pearls.begin(), pearls.end(), A);
    if (it == pearls.end()) throw std::logic_error("antipode_of: pearl not in necklace");
    return pearls[(static_cast<std::size_t>(it - pearls.begin()) + m / 2) % m];
}

}  // namespace

CheckReport verify_flipped_lemmas(const NecklaceSystem& sys) {
    const ProjGeom& geom = sys.geom();
    const std::uint32_t p = sys.p();
    CheckReport r{"flipped_lemmas", p, sys.gamma(), true, ""};
    Pgl g2 = order_two_class(geom);

    std::vector<Necklace> flipped;
    for (const Necklace& v : sys.enumerate_necklaces())
        if (sys.stabilizer_status(g2, v) == StabilizerStatus::Flipped) flipped.push_back(v);

    auto fail = [&](const std::string& msg) {
        r.pass = false;
        r.detail = msg;
        return r;
    };

    if (p % 4 == 1) {
        // The two fixed points of g2 must be antipodal in exactly the
        // flipped necklaces, (p-1)/2 of them.
        std::vector<ProjPoint> fixed;
        for (const ProjPoint& P : geom.points())
            if (geom.act(g2, P) == P) fixed.push_back(P);
        if (fixed.size() != 2) return fail("expected exactly 2 fixed points");
        PointPair axis = make_pair_sorted(fixed[0], fixed[1]);
        std::vector<Necklace> want;
        for (const Necklace& v : sys.enumerate_necklaces()) {
            auto pairs = antipodal_pairs(v);
            if (std::binary_search(pairs.begin(), pairs.end(), axis)) want.push_back(v);
        }
        if (flipped != want) return fail("flipped set differs from the antipodal-axis set");
        if (flipped.size() != (p - 1) / 2) {
            std::ostringstream os;
            os << "flipped count " << flipped.size() << ", want " << (p - 1) / 2;
            return fail(os.str());
        }
    } else {
        // Antipode-of-A is a bijection from flipped necklaces onto the
        // non-square cross-ratio locus, which has (p+1)/2 points.
        ProjPoint A = geom.finite(0);
        ProjPoint gA = geom.act(g2, A);
        std::set<ProjPoint> target;
        for (const ProjPoint& B : geom.points()) {
            if (B == A || B == gA) continue;
            ProjPoint cr = geom.cross_ratio(A, B, gA, geom.act(g2, B));
            if (!geom.is_infinity(cr) && geom.field().legendre(cr.id) == -1) target.insert(B);
        }
        std::set<ProjPoint> image;
        for (const Necklace& v : flipped) image.insert(antipode_of(v, A));
        if (image.size() != flipped.size()) return fail("antipode-of-A map is not injective");
        if (image != target) return fail("antipode-of-A image differs from non-square locus");
        if (target.size() != (p + 1) / 2) {
            std::ostringstream os;
            os << "locus size " << target.size() << ", want " << (p + 1) / 2;
            return fail(os.str());
        }
    }
    return r;
}

}  // namespace necklaces
