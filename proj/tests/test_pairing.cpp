#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "necklaces/pairing.hpp"
#include "necklaces/reference_data.hpp"

#include <functional>
#include <random>

using namespace necklaces;

namespace {

// Independent characteristic polynomial oracle: cofactor expansion of
// det(XI - M) over Z[X]. Exponential, fine for n <= 6.
IntPoly charpoly_oracle(const IntMat& M) {
    const std::size_t n = M.rows();
    std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = IntPoly{-mpz_class(M(i, j))};
            if (i == j) a[i][j] = poly_add(a[i][j], IntPoly{0, 1});
        }
    std::function<IntPoly(std::vector<std::size_t>, std::size_t)> det =
        [&](std::vector<std::size_t> cols, std::size_t row) -> IntPoly {
        if (cols.empty()) return IntPoly{1};
        IntPoly acc;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t < cols.size(); ++t)
                if (t != k) rest.push_back(cols[t]);
            IntPoly term = poly_mul(a[row][cols[k]], det(rest, row + 1));
            acc = (k % 2 == 0) ? poly_add(acc, term) : poly_sub(acc, term);
        }
        return acc;
    };
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det(cols, 0);
}

Necklace necklace_from_ids(const ProjGeom& geom, const std::vector<int>& ids) {
    std::vector<ProjPoint> pts;
    for (int v : ids) pts.push_back(v < 0 ? geom.infinity() : geom.finite(Fp(v)));
    return Necklace(OrientedNecklace(std::move(pts)));
}

}  // namespace

TEST_CASE("charpoly basics") {
    IntMat one_by_one(1, 1);
    one_by_one(0, 0) = 7;
    CHECK(charpoly(one_by_one) == IntPoly{-7, 1});

    for (std::size_t n : {2u, 5u})
        CHECK(poly_equal(charpoly(IntMat::identity(n)), poly_pow(IntPoly{-1, 1}, unsigned(n))));
}

TEST_CASE("charpoly agrees with the cofactor oracle on random small matrices") {
    std::mt19937 rng(20240812);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            IntMat M(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) M(i, j) = entry(rng);
            CHECK(poly_equal(charpoly(M), charpoly_oracle(M)));
        }
}

TEST_CASE("rank and determinant") {
    IntMat zero(4, 4);
    CHECK(rank_and_det(zero) == std::pair<std::size_t, mpz_class>{0, 0});
    CHECK(rank_and_det(IntMat::identity(5)) == std::pair<std::size_t, mpz_class>{5, 1});

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        IntMat M(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) M(i, j) = entry(rng);
        // det via the charpoly oracle: det(M) = (-1)^n * charpoly(0).
        IntPoly f = charpoly_oracle(M);
        mpz_class want = f.empty() ? mpz_class(0) : ((5 % 2) ? mpz_class(-f[0]) : f[0]);
        auto [rank, det] = rank_and_det(M);
        CHECK(det == want);
        if (det != 0) CHECK(rank == 5);
    }
}

TEST_CASE("pairing values on the published p=5 listing") {
    NecklaceSystem sys(GammaChoice{5, 1, 2});
    const auto& published = reference::necklace_list(5);
    std::vector<Necklace> v;
    for (const auto& ids : published) v.push_back(necklace_from_ids(sys.geom(), ids));

    CHECK(pairing_value(v[0], v[0]) == 3);
    for (int i = 1; i <= 6; ++i) CHECK(pairing_value(v[0], v[i]) == 0);
    for (int i = 7; i <= 9; ++i) CHECK(pairing_value(v[0], v[i]) == 1);
}

TEST_CASE("pairing is symmetric with the right diagonal and row sums") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        NecklaceSystem sys(find_gamma(p));
        auto necklaces = sys.enumerate_necklaces();
        IntMat M = pairing_matrix(necklaces);
        CHECK(M.rows() == std::size_t(p) * (p - 1) / 2);
        std::int64_t rowsum = (std::int64_t(p) * p - 1) / 4;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            CHECK(M(i, i) == std::int64_t(p + 1) / 2);
            CHECK(M.row_sum(i) == rowsum);
            for (std::size_t j = 0; j < M.cols(); ++j) {
                CHECK(M(i, j) == M(j, i));
                if (i != j) CHECK((M(i, j) == 0 || M(i, j) == 1));
            }
        }
    }
}

TEST_CASE("pairing positivity on random integer vectors") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-10, 10);
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        NecklaceSystem sys(find_gamma(p));
        IntMat M = pairing_matrix(sys.enumerate_necklaces());
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> u(M.rows());
            for (auto& x : u) x = entry(rng);
            std::int64_t quad = 0;
            for (std::size_t i = 0; i < M.rows(); ++i)
                for (std::size_t j = 0; j < M.cols(); ++j) quad += u[i] * M(i, j) * u[j];
            CHECK(quad >= 0);
        }
    }
}

TEST_CASE("pairing is PGL-equivariant") {
    std::mt19937 rng(9);
    for (std::uint32_t p : {5u, 7u}) {
        NecklaceSystem sys(find_gamma(p));
        auto necklaces = sys.enumerate_necklaces();
        auto all_g = sys.geom().enumerate_pgl();
        for (int trial = 0; trial < 10; ++trial) {
            const Pgl& g = all_g[rng() % all_g.size()];
            for (std::size_t i = 0; i < necklaces.size(); ++i)
                for (std::size_t j = i; j < necklaces.size(); ++j) {
                    Necklace gi(sys.apply(g, necklaces[i].rep()));
                    Necklace gj(sys.apply(g, necklaces[j].rep()));
                    CHECK(pairing_value(gi, gj) == pairing_value(necklaces[i], necklaces[j]));
                }
        }
    }
}

TEST_CASE("reference factorizations expand to the computed charpoly") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        NecklaceSystem sys(find_gamma(p));
        CharpolyCheck check = verify_charpoly_table(sys);
        REQUIRE(check.supported);
        CHECK(check.pass);
        CHECK(check.detail.empty());
    }
    CHECK_FALSE(verify_charpoly_table(NecklaceSystem(find_gamma(23))).supported);
}

TEST_CASE("p=5 charpoly equals the published eigenvalue factorization") {
    NecklaceSystem sys(GammaChoice{5, 1, 2});
    IntPoly computed = charpoly(pairing_matrix(sys.enumerate_necklaces()));
    IntPoly expected = expand_factors({{IntPoly{-6, 1}, 1}, {IntPoly{-1, 1}, 4}, {IntPoly{-4, 1}, 5}});
    CHECK(poly_equal(computed, expected));

    auto [rank, det] = rank_and_det(pairing_matrix(sys.enumerate_necklaces()));
    CHECK(rank == 10);
    CHECK(det == 6144);  // 6 * 1^4 * 4^5

    auto [rank7, det7] = rank_and_det(
        pairing_matrix(NecklaceSystem(GammaChoice{7, 1, 3}).enumerate_necklaces()));
    CHECK(rank7 == 21);
    CHECK(det7 != 0);
}

TEST_CASE("polynomial text forms mirror the published table style") {
    CHECK(poly_to_string(IntPoly{5, -10, 1}) == "X^2 - 10*X + 5");
    CHECK(poly_to_string(IntPoly{-30, 1}) == "X - 30");
    CHECK(poly_to_string(IntPoly{}) == "0");
    CHECK(factors_to_string(reference::charpoly_factors(11)) ==
          "(X - 30)*(X - 2)^10*(X - 8)^20*(X^2 - 10*X + 5)^12");
}
