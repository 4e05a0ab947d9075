#include "necklaces/verify.hpp"

#include "necklaces/invariants.hpp"
#include "necklaces/pairing.hpp"
#include "necklaces/reference_data.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace necklaces {

namespace {

GammaChoice pick_gamma(std::uint32_t p, const VerifyOptions& opt) {
    if (opt.gamma) {
        if (opt.gamma->p != p) throw std::invalid_argument("verify: gamma override is for another p");
        validate_gamma(*opt.gamma);
        return *opt.gamma;
    }
    return find_gamma(p);
}

CheckReport simple(const std::string& name, const NecklaceSystem& sys, bool pass,
                   const std::string& detail) {
    return {name, sys.p(), sys.gamma(), pass, pass ? "" : detail};
}

std::vector<CheckReport> merelade_suite(const NecklaceSystem& sys) {
    std::vector<CheckReport> out;
    auto oriented = sys.enumerate_oriented();

    std::set<Fq2Point> image;
    bool outside = true;
    for (const auto& v : oriented) {
        Fq2Point m = sys.merelade(v);
        outside = outside && !m.infinite && m.value.c1 != 0;
        image.insert(m);
    }
    std::uint64_t p = sys.p();
    bool bij = outside && image.size() == oriented.size() && image.size() == p * (p - 1);
    std::ostringstream os;
    os << "image size " << image.size() << " of " << oriented.size() << " oriented necklaces";
    out.push_back(simple("merelade_bijective", sys, bij, os.str()));

    bool equivariant = true, stab_equal = true;
    std::string eq_detail, st_detail;
    for (const Pgl& g : sys.geom().enumerate_pgl()) {
        for (const auto& v : oriented) {
            Fq2Point m = sys.merelade(v);
            OrientedNecklace gv = sys.apply(g, v);
            Fq2Point gm = sys.act(g, m);
            if (equivariant && !(gm == sys.merelade(gv))) {
                equivariant = false;
                eq_detail = "equivariance fails for some (g, necklace)";
            }
            if (stab_equal && ((gv == v) != (gm == m))) {
                stab_equal = false;
                st_detail = "stabilizers of necklace and image differ";
            }
        }
        if (!equivariant && !stab_equal) break;
    }
    out.push_back(simple("merelade_equivariant", sys, equivariant, eq_detail));
    out.push_back(simple("merelade_stabilizer", sys, stab_equal, st_detail));
    return out;
}

std::vector<CheckReport> pairing_suite(const NecklaceSystem& sys) {
    std::vector<CheckReport> out;
    const std::uint64_t p = sys.p();
    auto necklaces = sys.enumerate_necklaces();
    IntMat M = pairing_matrix(necklaces);

    {
        bool ok = true;
        std::string detail;
        std::int64_t diag = (p + 1) / 2, rowsum = std::int64_t(p * p - 1) / 4;
        for (std::size_t i = 0; ok && i < M.rows(); ++i) {
            if (M(i, i) != diag) { ok = false; detail = "bad diagonal entry"; }
            if (ok && M.row_sum(i) != rowsum) { ok = false; detail = "bad row sum"; }
            for (std::size_t j = 0; ok && j < M.cols(); ++j) {
                if (M(i, j) != M(j, i)) { ok = false; detail = "not symmetric"; }
                if (i != j && !(M(i, j) == 0 || M(i, j) == 1)) { ok = false; detail = "off-diagonal not 0/1"; }
            }
        }
        out.push_back(simple("pairing_matrix_shape", sys, ok, detail));
    }

    {
        auto [rank, det] = rank_and_det(M);
        bool ok = rank == M.rows() && det != 0;
        out.push_back(simple("pairing_nondegenerate", sys, ok, "pairing matrix is singular"));
    }

    {
        CheckReport r{"phi_lambda_is_pairing", sys.p(), sys.gamma(), true, ""};
        Bases b(sys.gamma());
        r = verify_phi_lambda_is_pairing(b);
        out.push_back(r);
    }

    {
        CharpolyCheck c = verify_charpoly_table(sys);
        if (c.supported)
            out.push_back(CheckReport{"pairing_table", sys.p(), sys.gamma(), c.pass, c.detail});
    }

    if (p <= 13) {
        // Spectrum is the same for every valid gamma: the rebasing
        // permutation conjugates one pairing matrix into the other.
        bool ok = true;
        std::string detail;
        IntPoly base_poly = charpoly(M);
        const QuadField& from = sys.quad();
        for (Fp t = 1; ok && t < p; ++t)
            for (Fp n = 1; ok && n < p; ++n) {
                GammaChoice other{sys.p(), t, n};
                try {
                    validate_gamma(other);
                } catch (const InvalidGamma&) {
                    continue;
                }
                NecklaceSystem sys2(other);
                auto necklaces2 = sys2.enumerate_necklaces();
                IntMat M2 = pairing_matrix(necklaces2);
                QuadField to(other);
                std::vector<std::size_t> perm(necklaces.size());
                for (std::size_t i = 0; i < necklaces.size(); ++i)
                    perm[i] = index_of(necklaces2, rebase_gamma(necklaces[i], from, to));
                for (std::size_t i = 0; ok && i < necklaces.size(); ++i)
                    for (std::size_t j = 0; j < necklaces.size(); ++j)
                        if (M2(perm[i], perm[j]) != M(i, j)) {
                            ok = false;
                            detail = "rebase permutation does not conjugate the matrices";
                            break;
                        }
                if (ok && !poly_equal(base_poly, charpoly(M2))) {
                    ok = false;
                    detail = "characteristic polynomials differ between gammas";
                }
            }
        out.push_back(simple("pairing_gamma_independent", sys, ok, detail));
    }
    return out;
}

std::vector<CheckReport> genus_suite(std::uint32_t p) {
    std::vector<CheckReport> out;
    CheckReport rh{"genus_rh_consistency", p, std::nullopt, true, ""};
    try {
        curve_invariants(p, CurveTag::Xnsp);
        curve_invariants(p, CurveTag::XnspPlus);
    } catch (const std::logic_error& e) {
        rh.pass = false;
        rh.detail = e.what();
    }
    out.push_back(rh);
    out.push_back(verify_genus_relation(p, p));
    return out;
}

std::vector<CheckReport> run_one(const std::string& suite, std::uint32_t p,
                                 const VerifyOptions& opt) {
    std::vector<CheckReport> out;
    auto append = [&](std::vector<CheckReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };

    if (suite == "chen86" || suite == "all") {
        Bases b(pick_gamma(p, opt));
        out.push_back(verify_mu_psi(b));
        out.push_back(verify_phi_psi(b));
        out.push_back(verify_mu_lambda(b));
        out.push_back(verify_laphi_column(b));
        out.push_back(verify_alphaalpha_column(b));
        out.push_back(verify_chen86(b));
    }
    if (suite == "degeneracy" || (suite == "all" && p <= 13)) {
        Bases b(pick_gamma(p, opt), true);
        append(verify_degeneracy(b, opt.epsilon));
        if (!opt.epsilon) {
            // The 4*phi identity must not depend on which non-square is used.
            const PrimeField& F = b.geom().field();
            Fp first = F.smallest_nonsquare();
            for (Fp e = first + 1; e < p; ++e)
                if (F.legendre(e) == -1) {
                    auto second = verify_degeneracy(b, e);
                    for (auto& r : second) r.name += "_eps2";
                    append(std::move(second));
                    break;
                }
        }
    }
    if (suite == "theta" || (suite == "all" && p <= 7)) {
        Bases b(pick_gamma(p, opt));
        append(verify_theta_lemma(b));
    }
    if (suite == "elliptic" || suite == "all") {
        NecklaceSystem sys(pick_gamma(p, opt));
        out.push_back(verify_elliptic_counts(sys));
        out.push_back(verify_flipped_lemmas(sys));
    }
    if (suite == "genus" || suite == "all") append(genus_suite(p));
    if (suite == "merelade" || suite == "all") append(merelade_suite(NecklaceSystem(pick_gamma(p, opt))));
    if (suite == "pairing" || suite == "all") append(pairing_suite(NecklaceSystem(pick_gamma(p, opt))));

    if (out.empty()) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"chen86",  "theta", "degeneracy", "elliptic",
                                                "genus",   "merelade", "pairing", "all"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& s = suite_names();
    return std::find(s.begin(), s.end(), name) != s.end();
}

std::vector<CheckReport> run_suite(const std::string& suite, std::uint32_t p,
                                   const VerifyOptions& opt) {
    if (!is_suite(suite)) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    return run_one(suite, p, opt);
}

std::vector<CheckReport> run_suite_range(const std::string& suite, std::uint32_t pmin,
                                         std::uint32_t pmax, const VerifyOptions& opt) {
    if (!is_suite(suite)) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    std::vector<std::uint32_t> primes = PrimeField::primes_in(std::max(pmin, 5u), pmax);
    std::vector<std::vector<CheckReport>> per_prime(primes.size());

    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || primes.size() <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i)
            per_prime[i] = run_one(suite, primes[i], opt);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= primes.size()) return;
                try {
                    per_prime[i] = run_one(suite, primes[i], opt);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, primes.size()); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<CheckReport> out;
    for (auto& v : per_prime)
        for (auto& r : v) out.push_back(std::move(r));
    return out;
}

}  // namespace necklaces
