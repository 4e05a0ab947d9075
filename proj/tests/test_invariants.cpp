#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "necklaces/invariants.hpp"

#include <random>

using namespace necklaces;

TEST_CASE("elliptic counts for small primes") {
    auto check = [](std::uint32_t p, std::int64_t e2, std::int64_t e3, std::int64_t e2p,
                    std::int64_t e3p) {
        EllipticCounts closed = count_elliptic_closed(p);
        CHECK(closed.e2 == e2);
        CHECK(closed.e3 == e3);
        CHECK(closed.e2_plus == e2p);
        CHECK(closed.e3_plus == e3p);
        EllipticCounts brute = count_elliptic_bruteforce(NecklaceSystem(find_gamma(p)));
        CHECK(brute.e2 == e2);
        CHECK(brute.e3 == e3);
        CHECK(brute.e2_plus == e2p);
        CHECK(brute.e3_plus == e3p);
    };
    check(5, 0, 2, 2, 1);
    check(7, 2, 0, 5, 0);
    check(11, 2, 2, 7, 1);
}

TEST_CASE("brute force equals closed forms up to 23") {
    for (std::uint32_t p : PrimeField::primes_in(5, 23))
        CHECK(verify_elliptic_counts(NecklaceSystem(find_gamma(p))).pass);
}

TEST_CASE("elliptic counts are conjugation-invariant") {
    std::mt19937 rng(41);
    for (std::uint32_t p : {5u, 7u, 11u}) {
        NecklaceSystem sys(find_gamma(p));
        const ProjGeom& geom = sys.geom();
        auto all_g = geom.enumerate_pgl();
        const Pgl& c = all_g[rng() % all_g.size()];
        Pgl g2 = geom.mul(geom.mul(c, order_two_class(geom)), geom.inverse(c));
        Pgl g3 = geom.mul(geom.mul(c, order_three_class(geom)), geom.inverse(c));
        EllipticCounts a = count_elliptic_bruteforce(sys);
        EllipticCounts b = count_elliptic_bruteforce(sys, g2, g3);
        CHECK(a.e2 == b.e2);
        CHECK(a.e3 == b.e3);
        CHECK(a.e2_plus == b.e2_plus);
        CHECK(a.e3_plus == b.e3_plus);
    }
}

TEST_CASE("when e3 = 2 the two fixed oriented necklaces form one w-orbit") {
    for (std::uint32_t p : {5u, 11u, 17u}) {  // p = 2 mod 3
        NecklaceSystem sys(find_gamma(p));
        Pgl g3 = order_three_class(sys.geom());
        std::vector<OrientedNecklace> fixed;
        for (const OrientedNecklace& v : sys.enumerate_oriented())
            if (sys.apply(g3, v) == v) fixed.push_back(v);
        REQUIRE(fixed.size() == 2);
        CHECK(reverse(fixed[0]) == fixed[1]);
    }
}

TEST_CASE("flipped lemmas") {
    NecklaceSystem s5(find_gamma(5)), s7(find_gamma(7)), s13(find_gamma(13));
    CHECK(verify_flipped_lemmas(s5).pass);
    CHECK(verify_flipped_lemmas(s7).pass);
    CHECK(verify_flipped_lemmas(s13).pass);

    auto flipped_count = [](const NecklaceSystem& sys) {
        Pgl g2 = order_two_class(sys.geom());
        std::size_t n = 0;
        for (const Necklace& v : sys.enumerate_necklaces())
            if (sys.stabilizer_status(g2, v) == StabilizerStatus::Flipped) ++n;
        return n;
    };
    CHECK(flipped_count(s5) == 2);    // (p-1)/2
    CHECK(flipped_count(s7) == 4);    // (p+1)/2
    CHECK(flipped_count(s13) == 6);   // (p-1)/2
}

TEST_CASE("curve invariants for published examples") {
    CurveInvariants nsp11 = curve_invariants(11, CurveTag::Xnsp);
    CHECK(nsp11.genus == 4);
    CHECK(nsp11.degree == 110);
    CHECK(curve_invariants(11, CurveTag::XnspPlus).genus == 1);

    CurveInvariants nsp5 = curve_invariants(5, CurveTag::Xnsp);
    CHECK(nsp5.genus == 0);
    CHECK(nsp5.e_inf == 4);

    CHECK(genus_closed_form(11, CurveTag::X0) == 1);
    CHECK(genus_closed_form(11, CurveTag::XspPlus) == 2);
    CHECK(genus_closed_form(13, CurveTag::XnspPlus) == 3);
    CHECK(genus_closed_form(13, CurveTag::X0) == 0);
    CHECK(genus_closed_form(13, CurveTag::XspPlus) == 3);
}

TEST_CASE("Riemann-Hurwitz consistency and cusp-width bookkeeping") {
    for (std::uint32_t p : PrimeField::primes_in(5, 61)) {
        for (CurveTag tag : {CurveTag::Xnsp, CurveTag::XnspPlus}) {
            CurveInvariants ci = curve_invariants(p, tag);  // throws on RH mismatch
            CHECK(genus_riemann_hurwitz(ci.degree, ci.e2, ci.e3, ci.e_inf) == ci.genus);
            // All cusps have width p.
            CHECK(ci.e_inf * p == ci.degree);
        }
        // The classical curves satisfy Riemann-Hurwitz with these tables too.
        for (CurveTag tag : {CurveTag::X0, CurveTag::XspPlus}) {
            CurveInvariants ci = curve_invariants(p, tag);
            CHECK(genus_riemann_hurwitz(ci.degree, ci.e2, ci.e3, ci.e_inf) == ci.genus);
        }
    }
}

TEST_CASE("genus relation") {
    CHECK(verify_genus_relation(5, 499).pass);
    CHECK(genus_closed_form(11, CurveTag::XnspPlus) + genus_closed_form(11, CurveTag::X0) ==
          genus_closed_form(11, CurveTag::XspPlus));
}
