#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "necklaces/necklace.hpp"
#include "necklaces/reference_data.hpp"

#include <random>
#include <set>

using namespace necklaces;

namespace {

OrientedNecklace from_ids(const ProjGeom& geom, const std::vector<int>& ids) {
    std::vector<ProjPoint> pts;
    for (int v : ids) pts.push_back(v < 0 ? geom.infinity() : geom.finite(Fp(v)));
    return OrientedNecklace(std::move(pts));
}

}  // namespace

TEST_CASE("xi matches the cross-ratio of consecutive published pearls") {
    // The published listings are the oracle for the constant cross-ratio.
    for (std::uint32_t p : {5u, 7u}) {
        NecklaceSystem sys(*reference::listed_gamma(p));
        OrientedNecklace v = from_ids(sys.geom(), reference::necklace_list(p).front());
        const auto& q = v.pearls();
        ProjPoint cr = sys.geom().cross_ratio(q[0], q[1], q[2], q[3]);
        CHECK_FALSE(sys.geom().is_infinity(cr));
        CHECK(sys.xi() == cr.id);
    }
    CHECK(NecklaceSystem(GammaChoice{5, 1, 2}).xi() == 4);
    CHECK(NecklaceSystem(GammaChoice{7, 1, 3}).xi() == 3);
}

TEST_CASE("xi is never 0 or 1") {
    for (std::uint32_t p : PrimeField::primes_in(5, 61))
        for (Fp t = 1; t < p; ++t)
            for (Fp n = 1; n < p; ++n) {
                try {
                    NecklaceSystem sys(GammaChoice{p, t, n});
                    CHECK(sys.xi() != 0);
                    CHECK(sys.xi() != 1);
                } catch (const InvalidGamma&) {
                }
            }
}

TEST_CASE("build_from_triple reproduces the published necklaces") {
    {
        NecklaceSystem sys(GammaChoice{5, 1, 2});
        const ProjGeom& g = sys.geom();
        OrientedNecklace v = sys.build_from_triple(g.finite(0), g.finite(1), g.finite(2));
        CHECK(v == from_ids(g, {0, 1, 2, 4, -1, 3}));
    }
    {
        NecklaceSystem sys(GammaChoice{7, 1, 3});
        const ProjGeom& g = sys.geom();
        OrientedNecklace v = sys.build_from_triple(g.finite(0), g.infinity(), g.finite(2));
        CHECK(v == from_ids(g, {0, -1, 2, 3, 5, 1, 4, 6}));
    }
}

TEST_CASE("turning element has order p+1 and lies in C_gamma") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        NecklaceSystem sys(find_gamma(p));
        const ProjGeom& g = sys.geom();
        Pgl h = sys.turning_element(g.finite(0), g.finite(1), g.infinity());
        CHECK(g.in_class_cgamma(h, sys.gamma()));
        Pgl cur = h;
        std::uint32_t order = 1;
        while (!(cur == g.identity())) {
            cur = g.mul(cur, h);
            ++order;
        }
        CHECK(order == p + 1);
    }
}

TEST_CASE("the two construction routes agree") {
    NecklaceSystem sys(GammaChoice{5, 1, 2});
    for (ProjPoint a : sys.geom().points())
        for (ProjPoint b : sys.geom().points()) {
            if (b == a) continue;
            for (ProjPoint c : sys.geom().points()) {
                if (c == a || c == b) continue;
                CHECK(sys.build_from_triple(a, b, c) ==
                      sys.build_from_triple_recurrence(a, b, c));
            }
        }

    NecklaceSystem sys11(find_gamma(11));
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::uint32_t> pick(0, 11);
    for (int i = 0; i < 200; ++i) {
        ProjPoint a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
        if (a == b || a == c || b == c) continue;
        CHECK(sys11.build_from_triple(a, b, c) == sys11.build_from_triple_recurrence(a, b, c));
    }
}

TEST_CASE("enumeration counts and route agreement") {
    NecklaceSystem sys5(GammaChoice{5, 1, 2});
    CHECK(sys5.enumerate_oriented().size() == 20);
    CHECK(sys5.enumerate_necklaces().size() == 10);
    CHECK(sys5.enumerate_oriented() == sys5.enumerate_oriented_recurrence());

    NecklaceSystem sys7(GammaChoice{7, 1, 3});
    CHECK(sys7.enumerate_oriented().size() == 42);
    CHECK(sys7.enumerate_necklaces().size() == 21);
    CHECK(sys7.enumerate_oriented() == sys7.enumerate_oriented_recurrence());
}

TEST_CASE("published listings appear in the enumerated set") {
    for (std::uint32_t p : {5u, 7u}) {
        NecklaceSystem sys(*reference::listed_gamma(p));
        auto computed = sys.enumerate_necklaces();
        std::set<Necklace> cset(computed.begin(), computed.end());
        std::set<Necklace> published;
        for (const auto& ids : reference::necklace_list(p))
            published.insert(Necklace(from_ids(sys.geom(), ids)));
        CHECK(published.size() == computed.size());
        CHECK(cset == published);
    }
}

TEST_CASE("reverse is an involution with no fixed oriented necklace") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        NecklaceSystem sys(find_gamma(p));
        for (const OrientedNecklace& v : sys.enumerate_oriented()) {
            CHECK(reverse(reverse(v)) == v);
            CHECK(reverse(v) != v);
        }
    }
    ProjGeom g5(5);
    CHECK(reverse(from_ids(g5, {0, 1, 2, 4, -1, 3})) == from_ids(g5, {0, 3, -1, 4, 2, 1}));
}

TEST_CASE("antipodal pairs") {
    ProjGeom g5(5);
    OrientedNecklace v = from_ids(g5, {0, 1, 2, 4, -1, 3});
    auto pairs = antipodal_pairs(v);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == make_pair_sorted(g5.finite(0), g5.finite(4)));
    CHECK(pairs[1] == make_pair_sorted(g5.finite(1), g5.infinity()));
    CHECK(pairs[2] == make_pair_sorted(g5.finite(2), g5.finite(3)));
    CHECK(antipodal_pairs(reverse(v)) == pairs);

    for (std::uint32_t p : {7u, 11u}) {
        NecklaceSystem sys(find_gamma(p));
        for (const OrientedNecklace& w : sys.enumerate_oriented())
            CHECK(antipodal_pairs(w).size() == (p + 1) / 2);
    }
}

TEST_CASE("every enumerated necklace has constant cross-ratio xi at all rotations") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        NecklaceSystem sys(find_gamma(p));
        const ProjGeom& g = sys.geom();
        const Fp xi = sys.xi();
        for (const OrientedNecklace& v : sys.enumerate_oriented()) {
            const auto& q = v.pearls();
            const std::size_t m = q.size();
            for (std::size_t i = 0; i < m; ++i) {
                ProjPoint cr = g.cross_ratio(q[i], q[(i + 1) % m], q[(i + 2) % m], q[(i + 3) % m]);
                CHECK(cr == g.finite(xi));
            }
        }
    }
}

TEST_CASE("PGL acts transitively on oriented necklaces") {
    for (std::uint32_t p : {5u, 7u}) {
        NecklaceSystem sys(find_gamma(p));
        auto all = sys.enumerate_oriented();
        std::set<OrientedNecklace> orbit;
        for (const Pgl& g : sys.geom().enumerate_pgl()) orbit.insert(sys.apply(g, all.front()));
        CHECK(orbit.size() == all.size());
    }
}

TEST_CASE("stabilizer orders") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        NecklaceSystem sys(find_gamma(p));
        auto oriented = sys.enumerate_oriented();
        std::mt19937 rng(23);
        for (int trial = 0; trial < 3; ++trial) {
            const OrientedNecklace& v = oriented[rng() % oriented.size()];
            Necklace nv(v);
            std::size_t fix_oriented = 0, fix_necklace = 0;
            for (const Pgl& g : sys.geom().enumerate_pgl()) {
                if (sys.apply(g, v) == v) ++fix_oriented;
                if (sys.stabilizer_status(g, nv) != StabilizerStatus::Moved) ++fix_necklace;
            }
            CHECK(fix_oriented == p + 1);
            CHECK(fix_necklace == 2 * (p + 1));
        }
    }
}

TEST_CASE("stabilizer status basics") {
    NecklaceSystem sys(GammaChoice{5, 1, 2});
    const ProjGeom& g = sys.geom();
    Pgl h = sys.turning_element(g.finite(0), g.finite(1), g.finite(2));
    Necklace v(sys.build_from_triple(g.finite(0), g.finite(1), g.finite(2)));
    CHECK(sys.stabilizer_status(h, v) == StabilizerStatus::FixedPreservingOrientation);
    for (const Necklace& w : sys.enumerate_necklaces())
        CHECK(sys.stabilizer_status(g.identity(), w) ==
              StabilizerStatus::FixedPreservingOrientation);
}

TEST_CASE("antipodal pairing lemma") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        NecklaceSystem sys(find_gamma(p));
        const ProjGeom& g = sys.geom();
        auto necklaces = sys.enumerate_necklaces();
        std::vector<std::vector<PointPair>> pair_sets;
        for (const Necklace& v : necklaces) pair_sets.push_back(antipodal_pairs(v));

        auto count_with = [&](const PointPair& q) {
            std::size_t c = 0;
            for (const auto& ps : pair_sets)
                if (std::binary_search(ps.begin(), ps.end(), q)) ++c;
            return c;
        };
        auto count_with_both = [&](const PointPair& q, const PointPair& r) {
            std::size_t c = 0;
            for (const auto& ps : pair_sets)
                if (std::binary_search(ps.begin(), ps.end(), q) &&
                    std::binary_search(ps.begin(), ps.end(), r))
                    ++c;
            return c;
        };

        for (ProjPoint A : g.points())
            for (ProjPoint B : g.points()) {
                if (!(A < B)) continue;
                CHECK(count_with(make_pair_sorted(A, B)) == (p - 1) / 2);
                for (ProjPoint C : g.points())
                    for (ProjPoint D : g.points()) {
                        if (!(C < D)) continue;
                        if (C == A || C == B || D == A || D == B) continue;
                        ProjPoint cr = g.cross_ratio(A, B, C, D);
                        std::size_t expected =
                            g.field().legendre(cr.id) == -1 ? 1 : 0;
                        CHECK(count_with_both(make_pair_sorted(A, B), make_pair_sorted(C, D)) ==
                              expected);
                    }
            }
    }
}

TEST_CASE("rebase between gamma choices") {
    QuadField from(GammaChoice{7, 1, 3});
    // Another valid generator choice at p = 7.
    GammaChoice other = [] {
        for (Fp t = 1; t < 7; ++t)
            for (Fp n = 1; n < 7; ++n) {
                if (t == 1 && n == 3) continue;
                try {
                    return QuadField(GammaChoice{7, t, n}).choice();
                } catch (const InvalidGamma&) {
                }
            }
        throw std::logic_error("no second gamma");
    }();
    QuadField to(other);

    NecklaceSystem sys_from(from.choice()), sys_to(other);
    auto from_set = sys_from.enumerate_oriented();
    auto to_set = sys_to.enumerate_oriented();
    std::set<OrientedNecklace> to_lookup(to_set.begin(), to_set.end());

    std::set<OrientedNecklace> image;
    for (const OrientedNecklace& v : from_set) {
        OrientedNecklace w = rebase_gamma(v, from, to);
        CHECK(to_lookup.count(w) == 1);
        CHECK(rebase_gamma(w, to, from) == v);
        image.insert(w);
    }
    CHECK(image.size() == from_set.size());

    // Identity rebase.
    for (const OrientedNecklace& v : from_set) CHECK(rebase_gamma(v, from, from) == v);
}

TEST_CASE("rebasing preserves antipodal pairs") {
    for (std::uint32_t p : {7u, 11u}) {
        QuadField from(find_gamma(p));
        std::vector<GammaChoice> all_gammas;
        for (Fp t = 1; t < p; ++t)
            for (Fp n = 1; n < p; ++n) {
                try {
                    validate_gamma(GammaChoice{p, t, n});
                    all_gammas.push_back(GammaChoice{p, t, n});
                } catch (const InvalidGamma&) {
                }
            }
        NecklaceSystem sys(from.choice());
        auto oriented = sys.enumerate_oriented();
        for (const GammaChoice& gc : all_gammas) {
            QuadField to(gc);
            for (const OrientedNecklace& v : oriented)
                CHECK(antipodal_pairs(rebase_gamma(v, from, to)) == antipodal_pairs(v));
        }
    }
}

TEST_CASE("discrete log") {
    for (std::uint32_t p : {5u, 7u, 13u}) {
        QuadField K(find_gamma(p));
        FqElement g = K.gamma();
        for (std::uint64_t k : std::vector<std::uint64_t>{0, 1, 5, 17, std::uint64_t(p) * p - 2}) {
            CHECK(discrete_log(K, g, K.pow(g, k)) == k % (std::uint64_t(p) * p - 1));
        }
    }
}

TEST_CASE("merelade embeds necklaces outside P^1(F_p) bijectively") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        NecklaceSystem sys(find_gamma(p));
        auto oriented = sys.enumerate_oriented();
        std::set<Fq2Point> image;
        for (const OrientedNecklace& v : oriented) {
            Fq2Point m = sys.merelade(v);
            CHECK_FALSE(m.infinite);
            CHECK(m.value.c1 != 0);
            image.insert(m);
        }
        CHECK(image.size() == std::size_t(p) * (p - 1));
    }
}

TEST_CASE("merelade is PGL-equivariant on p=5") {
    NecklaceSystem sys(GammaChoice{5, 1, 2});
    auto oriented = sys.enumerate_oriented();
    for (const Pgl& g : sys.geom().enumerate_pgl())
        for (const OrientedNecklace& v : oriented)
            CHECK(sys.merelade(sys.apply(g, v)) == sys.act(g, sys.merelade(v)));
}
