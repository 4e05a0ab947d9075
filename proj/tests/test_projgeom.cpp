#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "necklaces/projline.hpp"

#include <random>
#include <set>

using namespace necklaces;

namespace {

std::vector<std::array<ProjPoint, 3>> distinct_triples(const ProjGeom& geom) {
    std::vector<std::array<ProjPoint, 3>> out;
    for (ProjPoint a : geom.points())
        for (ProjPoint b : geom.points()) {
            if (b == a) continue;
            for (ProjPoint c : geom.points()) {
                if (c == a || c == b) continue;
                out.push_back({a, b, c});
            }
        }
    return out;
}

Pgl random_pgl(const ProjGeom& geom, std::mt19937& rng) {
    std::uniform_int_distribution<Fp> dist(0, geom.p() - 1);
    for (;;) {
        Mat2 m{dist(rng), dist(rng), dist(rng), dist(rng)};
        if (mat2_det(geom.field(), m) != 0) return geom.canonical(m);
    }
}

}  // namespace

TEST_CASE("point enumeration and order") {
    ProjGeom g5(5), g7(7);
    CHECK(g5.points().size() == 6);
    CHECK(g7.points().size() == 8);
    auto pts = g5.points();
    CHECK(pts.front() == g5.finite(0));
    CHECK(pts.back() == g5.infinity());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) CHECK(pts[i] < pts[i + 1]);
}

TEST_CASE("pgl enumeration is complete, canonical and duplicate-free") {
    for (std::uint32_t p : {5u, 7u}) {
        ProjGeom geom(p);
        auto all = geom.enumerate_pgl();
        CHECK(all.size() == std::size_t(p) * (p * p - 1));
        std::set<std::uint64_t> keys;
        for (const Pgl& g : all) {
            CHECK(geom.canonical(g.mat()) == g);
            keys.insert(g.key());
        }
        CHECK(keys.size() == all.size());
    }
}

TEST_CASE("action basics") {
    ProjGeom geom(5);
    Pgl id = geom.identity();
    for (ProjPoint P : geom.points()) CHECK(geom.act(id, P) == P);

    // h_0 = [0,-n;1,t] sends infinity = (1:0) to (0:1) = the point 0.
    Pgl h0 = geom.canonical(Mat2{0, geom.field().neg(2), 1, 1});
    CHECK(geom.act(h0, geom.infinity()) == geom.finite(0));

    std::mt19937 rng(7);
    for (std::uint32_t p : {5u, 7u, 11u}) {
        ProjGeom g(p);
        std::uniform_int_distribution<std::uint32_t> pick(0, g.p());
        for (int i = 0; i < 100; ++i) {
            Pgl x = random_pgl(g, rng);
            ProjPoint P{pick(rng)};
            CHECK(g.act(x, g.act(g.inverse(x), P)) == P);
        }
    }
}

TEST_CASE("the action is faithful") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        ProjGeom geom(p);
        for (const Pgl& g : geom.enumerate_pgl()) {
            if (g == geom.identity()) continue;
            bool moves = false;
            for (ProjPoint P : geom.points())
                if (geom.act(g, P) != P) {
                    moves = true;
                    break;
                }
            CHECK(moves);
        }
    }
}

TEST_CASE("cross-ratio of the standard frame") {
    ProjGeom geom(7);
    ProjPoint inf = geom.infinity(), zero = geom.finite(0), one = geom.finite(1);
    for (Fp d = 2; d < 7; ++d)
        CHECK(geom.cross_ratio(inf, zero, one, geom.finite(d)) == geom.finite(d));
    // Degenerate fourth points.
    ProjPoint A = geom.finite(2), B = geom.finite(5), C = geom.infinity();
    CHECK(geom.cross_ratio(A, B, C, C) == one);
    CHECK(geom.cross_ratio(A, B, C, B) == zero);
    CHECK(geom.cross_ratio(A, B, C, A) == inf);
    CHECK_THROWS_AS(geom.cross_ratio(A, A, B, C), std::invalid_argument);
}

TEST_CASE("frame transform postconditions") {
    ProjGeom geom(5);
    CHECK(geom.frame_transform(geom.infinity(), geom.finite(0), geom.finite(1)) ==
          geom.identity());
    for (const auto& t : distinct_triples(geom)) {
        Pgl f = geom.frame_transform(t[0], t[1], t[2]);
        CHECK(geom.act(f, t[0]) == geom.infinity());
        CHECK(geom.act(f, t[1]) == geom.finite(0));
        CHECK(geom.act(f, t[2]) == geom.finite(1));
    }
}

TEST_CASE("frame transform uniqueness under composition") {
    ProjGeom geom(7);
    std::mt19937 rng(11);
    auto triples = distinct_triples(geom);
    for (int i = 0; i < 50; ++i) {
        Pgl g = random_pgl(geom, rng);
        const auto& t = triples[rng() % triples.size()];
        Pgl lhs = geom.mul(
            geom.frame_transform(geom.act(g, t[0]), geom.act(g, t[1]), geom.act(g, t[2])), g);
        CHECK(lhs == geom.frame_transform(t[0], t[1], t[2]));
    }
}

TEST_CASE("solve_fourth inverts cross_ratio") {
    ProjGeom geom(5);
    for (const auto& t : distinct_triples(geom))
        for (ProjPoint D : geom.points()) {
            if (D == t[0] || D == t[1] || D == t[2]) continue;
            ProjPoint cr = geom.cross_ratio(t[0], t[1], t[2], D);
            CHECK(geom.solve_fourth(t[0], t[1], t[2], cr.id) == D);
        }
    CHECK_THROWS_AS(geom.solve_fourth(geom.finite(0), geom.finite(1), geom.finite(2), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(geom.solve_fourth(geom.finite(0), geom.finite(1), geom.finite(2), 1),
                    std::invalid_argument);

    // Fourth pearl of the published p=7 necklace (0, inf, 2, 3, ...).
    ProjGeom g7(7);
    CHECK(g7.cross_ratio(g7.finite(0), g7.infinity(), g7.finite(2), g7.finite(3)) ==
          g7.finite(3));
    CHECK(g7.solve_fourth(g7.finite(0), g7.infinity(), g7.finite(2), 3) == g7.finite(3));
}

TEST_CASE("cross-ratio is PGL-invariant") {
    {
        ProjGeom geom(5);
        auto triples = distinct_triples(geom);
        for (const Pgl& g : geom.enumerate_pgl())
            for (const auto& t : triples)
                for (ProjPoint D : geom.points()) {
                    if (D == t[0] || D == t[1] || D == t[2]) continue;
                    CHECK(geom.cross_ratio(geom.act(g, t[0]), geom.act(g, t[1]),
                                           geom.act(g, t[2]), geom.act(g, D)) ==
                          geom.cross_ratio(t[0], t[1], t[2], D));
                }
    }
    std::mt19937 rng(13);
    for (std::uint32_t p : {7u, 11u, 13u}) {
        ProjGeom geom(p);
        std::uniform_int_distribution<std::uint32_t> pick(0, geom.p());
        int done = 0;
        while (done < 10000) {
            ProjPoint A{pick(rng)}, B{pick(rng)}, C{pick(rng)}, D{pick(rng)};
            if (A == B || A == C || B == C || D == A || D == B || D == C) continue;
            Pgl g = random_pgl(geom, rng);
            CHECK(geom.cross_ratio(geom.act(g, A), geom.act(g, B), geom.act(g, C),
                                   geom.act(g, D)) == geom.cross_ratio(A, B, C, D));
            ++done;
        }
    }
}

TEST_CASE("cross-ratio pair-swap symmetry") {
    for (std::uint32_t p : {5u, 7u}) {
        ProjGeom geom(p);
        for (const auto& t : distinct_triples(geom))
            for (ProjPoint D : geom.points()) {
                if (D == t[0] || D == t[1] || D == t[2]) continue;
                CHECK(geom.cross_ratio(t[0], t[1], t[2], D) ==
                      geom.cross_ratio(t[1], t[0], D, t[2]));
            }
    }
}

TEST_CASE("C_gamma membership") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        ProjGeom geom(p);
        GammaChoice gamma = find_gamma(p);
        Pgl h0 = geom.canonical(Mat2{0, geom.field().neg(gamma.n), 1, gamma.t});
        CHECK(geom.in_class_cgamma(h0, gamma));
        CHECK_FALSE(geom.in_class_cgamma(geom.identity(), gamma));

        std::size_t count = 0;
        for (const Pgl& g : geom.enumerate_pgl())
            if (geom.in_class_cgamma(g, gamma)) {
                ++count;
                CHECK(geom.in_class_cgamma(geom.inverse(g), gamma));
            }
        CHECK(count == std::size_t(p) * (p - 1));
    }
}
