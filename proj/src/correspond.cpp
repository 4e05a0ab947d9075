#include "necklaces/correspond.hpp"

#include "necklaces/pairing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace necklaces {

namespace {

std::uint64_t triple_key(std::uint32_t m, const std::array<ProjPoint, 3>& t) {
    return (std::uint64_t(t[0].id) * m + t[1].id) * m + t[2].id;
}

std::string shape(const IntMat& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

CheckReport report_eq(std::string name, const Bases& b, const IntMat& got, const IntMat& want) {
    CheckReport r{std::move(name), b.p(), b.sys().gamma(), true, ""};
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        r.pass = false;
        r.detail = "shape mismatch: got " + shape(got) + ", want " + shape(want);
        return r;
    }
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            if (got(i, j) != want(i, j)) {
                r.pass = false;
                std::ostringstream os;
                os << "entry (" << i << "," << j << "): got " << got(i, j) << ", want "
                   << want(i, j);
                r.detail = os.str();
                return r;
            }
    return r;
}

}  // namespace

Bases::Bases(const GammaChoice& gamma, std::optional<bool> with_triples) : sys_(gamma) {
    const std::uint32_t m = p() + 1;
    points_ = geom().points();
    pairs_.reserve(std::size_t(m) * (m - 1) / 2);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j)
            pairs_.push_back(PointPair{ProjPoint{i}, ProjPoint{j}});

    necklaces_ = sys_.enumerate_necklaces();
    necklace_antipodals_.reserve(necklaces_.size());
    pair_to_necklaces_.assign(pairs_.size(), {});
    for (std::size_t v = 0; v < necklaces_.size(); ++v) {
        necklace_antipodals_.push_back(antipodal_pairs(necklaces_[v]));
        for (const PointPair& q : necklace_antipodals_.back())
            pair_to_necklaces_[pair_index(q)].push_back(v);
    }

    has_triples_ = with_triples.value_or(p() <= 13);
    if (has_triples_) {
        triples_.reserve(std::size_t(m) * (m - 1) * (m - 2));
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t bb = 0; bb < m; ++bb) {
                if (bb == a) continue;
                for (std::uint32_t c = 0; c < m; ++c) {
                    if (c == a || c == bb) continue;
                    triples_.push_back({ProjPoint{a}, ProjPoint{bb}, ProjPoint{c}});
                }
            }
        triple_lookup_.reserve(triples_.size() * 2);
        for (std::size_t i = 0; i < triples_.size(); ++i)
            triple_lookup_.emplace(triple_key(m, triples_[i]), i);
    }
}

const std::vector<std::array<ProjPoint, 3>>& Bases::triples() const {
    if (!has_triples_)
        throw std::logic_error("Bases: triples basis not materialized for this p");
    return triples_;
}

std::size_t Bases::pair_index(const PointPair& q) const {
    // Lexicographic rank of {i < j} among pairs from {0, ..., p}.
    const std::uint64_t P = p();
    const std::uint64_t i = q.first.id, j = q.second.id;
    return i * P - i * (i - 1) / 2 + (j - i - 1);
}

std::size_t Bases::triple_index(const std::array<ProjPoint, 3>& t) const {
    if (!has_triples_)
        throw std::logic_error("Bases: triples basis not materialized for this p");
    return triple_lookup_.at(triple_key(p() + 1, t));
}

IntMat map_psi(const Bases& b) {
    IntMat M(b.pairs().size(), b.points().size());
    for (const ProjPoint& A : b.points())
        for (const ProjPoint& B : b.points()) {
            if (B == A) continue;
            M(b.pair_index(make_pair_sorted(A, B)), b.point_index(A)) = 1;
        }
    return M;
}

IntMat map_mu(const Bases& b) {
    IntMat M(b.points().size(), b.pairs().size());
    for (std::size_t q = 0; q < b.pairs().size(); ++q) {
        M(b.point_index(b.pairs()[q].first), q) = 1;
        M(b.point_index(b.pairs()[q].second), q) = 1;
    }
    return M;
}

IntMat map_phi(const Bases& b) {
    IntMat M(b.necklaces().size(), b.pairs().size());
    for (std::size_t q = 0; q < b.pairs().size(); ++q)
        for (std::size_t v : b.necklaces_with_pair(q)) M(v, q) = 1;
    return M;
}

IntMat map_lambda(const Bases& b) {
    IntMat M(b.pairs().size(), b.necklaces().size());
    for (std::size_t v = 0; v < b.necklaces().size(); ++v)
        for (const PointPair& q : b.necklace_antipodals(v)) M(b.pair_index(q), v) = 1;
    return M;
}

IntMat map_alpha(const Bases& b) {
    const ProjGeom& geom = b.geom();
    const ProjPoint minus_one = geom.finite(geom.p() - 1);
    IntMat M(b.pairs().size(), b.pairs().size());
    for (std::size_t q = 0; q < b.pairs().size(); ++q) {
        const auto [A, B] = b.pairs()[q];
        for (std::size_t r = 0; r < b.pairs().size(); ++r) {
            const auto [C, D] = b.pairs()[r];
            if (C == A || C == B || D == A || D == B) continue;
            if (geom.cross_ratio(A, B, C, D) == minus_one) M(r, q) = 1;
        }
    }
    return M;
}

OrientedNecklace pi_nsp_oriented(const Bases& b, const std::array<ProjPoint, 3>& t) {
    return b.sys().build_from_triple(t[0], t[1], t[2]);
}

Necklace tilde_pi_nsp(const Bases& b, const std::array<ProjPoint, 3>& t, Fp epsilon) {
    const ProjGeom& geom = b.geom();
    if (geom.field().legendre(epsilon) != -1)
        throw std::invalid_argument("tilde_pi_nsp: epsilon must be a non-square");
    ProjPoint D = geom.solve_fourth(t[0], t[1], t[2], epsilon);
    PointPair qAB = make_pair_sorted(t[0], t[1]);
    PointPair qCD = make_pair_sorted(t[2], D);
    const Necklace* found = nullptr;
    for (std::size_t v : b.necklaces_with_pair(b.pair_index(qAB))) {
        const auto& pairs = b.necklace_antipodals(v);
        if (std::binary_search(pairs.begin(), pairs.end(), qCD)) {
            if (found)
                throw std::logic_error("tilde_pi_nsp: necklace with both antipodal pairs not unique");
            found = &b.necklaces()[v];
        }
    }
    if (!found) throw std::logic_error("tilde_pi_nsp: no necklace with both antipodal pairs");
    return *found;
}

IntMat pushforward(std::size_t target_size, std::size_t source_size,
                   const std::function<std::size_t(std::size_t)>& f) {
    IntMat M(target_size, source_size);
    for (std::size_t j = 0; j < source_size; ++j) M(f(j), j) += 1;
    return M;
}

IntMat pushforward_pi0(const Bases& b) {
    return pushforward(b.points().size(), b.triples().size(),
                       [&](std::size_t j) { return b.point_index(pi_0(b.triples()[j])); });
}

IntMat pushforward_pi_sp(const Bases& b) {
    return pushforward(b.pairs().size(), b.triples().size(),
                       [&](std::size_t j) { return b.pair_index(pi_sp(b.triples()[j])); });
}

IntMat pushforward_tilde_pi_nsp(const Bases& b, Fp epsilon) {
    return pushforward(b.necklaces().size(), b.triples().size(), [&](std::size_t j) {
        return b.necklace_index(tilde_pi_nsp(b, b.triples()[j], epsilon));
    });
}

IntMat perm_points(const Bases& b, const Pgl& g) {
    return pushforward(b.points().size(), b.points().size(), [&](std::size_t j) {
        return b.point_index(b.geom().act(g, b.points()[j]));
    });
}

IntMat perm_pairs(const Bases& b, const Pgl& g) {
    return pushforward(b.pairs().size(), b.pairs().size(), [&](std::size_t j) {
        const auto& q = b.pairs()[j];
        return b.pair_index(make_pair_sorted(b.geom().act(g, q.first), b.geom().act(g, q.second)));
    });
}

IntMat perm_necklaces(const Bases& b, const Pgl& g) {
    return pushforward(b.necklaces().size(), b.necklaces().size(), [&](std::size_t j) {
        return b.necklace_index(Necklace(b.sys().apply(g, b.necklaces()[j].rep())));
    });
}

std::vector<Pgl> stabilizer_of_point(const ProjGeom& geom, ProjPoint A) {
    std::vector<Pgl> out;
    for (const Pgl& g : geom.enumerate_pgl())
        if (geom.act(g, A) == A) out.push_back(g);
    return out;
}

std::vector<Pgl> stabilizer_of_pair(const ProjGeom& geom, const PointPair& q) {
    std::vector<Pgl> out;
    for (const Pgl& g : geom.enumerate_pgl()) {
        ProjPoint a = geom.act(g, q.first), b2 = geom.act(g, q.second);
        if ((a == q.first && b2 == q.second) || (a == q.second && b2 == q.first))
            out.push_back(g);
    }
    return out;
}

std::vector<Pgl> stabilizer_of_necklace(const NecklaceSystem& sys, const Necklace& v) {
    std::vector<Pgl> out;
    for (const Pgl& g : sys.geom().enumerate_pgl())
        if (sys.stabilizer_status(g, v) != StabilizerStatus::Moved) out.push_back(g);
    return out;
}

CosetSpace coset_space(const ProjGeom& geom, const std::vector<Pgl>& group,
                       const std::vector<Pgl>& subgroup) {
    CosetSpace cs;
    cs.coset_of.reserve(group.size() * 2);
    for (const Pgl& g : group) {
        if (cs.coset_of.count(g.key())) continue;
        std::size_t idx = cs.reps.size();
        cs.reps.push_back(g);
        for (const Pgl& h : subgroup) cs.coset_of.emplace(geom.mul(g, h).key(), idx);
    }
    if (cs.reps.size() * subgroup.size() != group.size())
        throw std::logic_error("coset_space: subgroup does not partition the group");
    return cs;
}

IntMat theta(const ProjGeom& geom, const std::vector<Pgl>& H, const Pgl& g,
             const std::vector<Pgl>& Hprime, const CosetSpace& source,
             const CosetSpace& target) {
    // Collect the double coset H g H' and pick one representative per left
    // H'-coset inside it.
    std::unordered_set<std::uint64_t> seen;
    std::unordered_map<std::size_t, Pgl> omega;  // target coset -> representative
    for (const Pgl& h : H) {
        Pgl x = geom.mul(h, g);
        for (const Pgl& hp : Hprime) {
            Pgl e = geom.mul(x, hp);
            if (!seen.insert(e.key()).second) continue;
            omega.emplace(target.index(e), e);
        }
    }
    if (omega.size() * Hprime.size() != seen.size())
        throw std::logic_error("theta: double coset is not a disjoint union of cosets");

    IntMat M(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        const Pgl& x = source.reps[j];
        for (const auto& [_, s] : omega) M(target.index(geom.mul(x, s)), j) += 1;
    }
    return M;
}

CheckReport verify_mu_psi(const Bases& b) {
    IntMat want = IntMat::identity(b.points().size()).scaled(b.p() - 1) +
                  IntMat::ones(b.points().size(), b.points().size());
    return report_eq("mu_psi", b, map_mu(b) * map_psi(b), want);
}

CheckReport verify_phi_psi(const Bases& b) {
    IntMat want = IntMat::ones(b.necklaces().size(), b.points().size());
    return report_eq("phi_psi_allones", b, map_phi(b) * map_psi(b), want);
}

CheckReport verify_mu_lambda(const Bases& b) {
    IntMat want = IntMat::ones(b.points().size(), b.necklaces().size());
    return report_eq("mu_lambda_allones", b, map_mu(b) * map_lambda(b), want);
}

namespace {

// The common shape of the lambda.phi and alpha.alpha column formulas:
// (p-1)/2 on the diagonal plus the indicator of a fixed cross-ratio class on
// disjoint pairs.
IntMat cross_ratio_class_matrix(const Bases& b, int legendre_value) {
    const ProjGeom& geom = b.geom();
    const PrimeField& F = geom.field();
    IntMat M(b.pairs().size(), b.pairs().size());
    for (std::size_t q = 0; q < b.pairs().size(); ++q) {
        const auto [A, B] = b.pairs()[q];
        M(q, q) = (b.p() - 1) / 2;
        for (std::size_t r = 0; r < b.pairs().size(); ++r) {
            const auto [C, D] = b.pairs()[r];
            if (C == A || C == B || D == A || D == B) continue;
            ProjPoint cr = geom.cross_ratio(A, B, C, D);
            if (F.legendre(cr.id) == legendre_value) M(r, q) += 1;
        }
    }
    return M;
}

}  // namespace

CheckReport verify_laphi_column(const Bases& b) {
    return report_eq("laphi_column", b, map_lambda(b) * map_phi(b),
                     cross_ratio_class_matrix(b, -1));
}

CheckReport verify_alphaalpha_column(const Bases& b) {
    IntMat alpha = map_alpha(b);
    return report_eq("alphaalpha_column", b, alpha * alpha, cross_ratio_class_matrix(b, +1));
}

CheckReport verify_chen86(const Bases& b) {
    IntMat alpha = map_alpha(b);
    IntMat got = map_lambda(b) * map_phi(b) + alpha * alpha + map_psi(b) * map_mu(b);
    IntMat want = IntMat::identity(b.pairs().size()).scaled(b.p()) +
                  IntMat::ones(b.pairs().size(), b.pairs().size());
    return report_eq("chen86", b, got, want);
}

CheckReport verify_phi_lambda_is_pairing(const Bases& b) {
    return report_eq("phi_lambda_is_pairing", b, map_phi(b) * map_lambda(b),
                     pairing_matrix(b.necklaces()));
}

std::vector<CheckReport> verify_degeneracy(const Bases& b, std::optional<Fp> epsilon) {
    Fp eps = epsilon.value_or(b.geom().field().smallest_nonsquare());
    IntMat P0 = pushforward_pi0(b);
    IntMat Psp = pushforward_pi_sp(b);
    IntMat Pn = pushforward_tilde_pi_nsp(b, eps);
    std::vector<CheckReport> out;
    out.push_back(report_eq("degeneracy_psi", b, Psp * pullback(P0), map_psi(b).scaled(b.p() - 1)));
    out.push_back(report_eq("degeneracy_mu", b, P0 * pullback(Psp), map_mu(b).scaled(b.p() - 1)));
    out.push_back(report_eq("degeneracy_phi", b, Pn * pullback(Psp), map_phi(b).scaled(4)));
    out.push_back(report_eq("degeneracy_lambda", b, Psp * pullback(Pn), map_lambda(b).scaled(4)));
    return out;
}

std::vector<CheckReport> verify_theta_lemma(const Bases& b) {
    const ProjGeom& geom = b.geom();
    std::vector<CheckReport> out;

    ProjPoint A0 = geom.finite(0), B0 = geom.infinity();
    PointPair anchor_pair = make_pair_sorted(A0, B0);
    const auto& with_pair = b.necklaces_with_pair(b.pair_index(anchor_pair));
    if (with_pair.empty()) throw std::logic_error("verify_theta_lemma: no anchor necklace");
    const Necklace& v0 = b.necklaces()[with_pair.front()];  // smallest such necklace

    std::vector<Pgl> G = geom.enumerate_pgl();
    std::vector<Pgl> Bsub = stabilizer_of_point(geom, A0);
    std::vector<Pgl> Ssub = stabilizer_of_pair(geom, anchor_pair);
    std::vector<Pgl> Nsub = stabilizer_of_necklace(b.sys(), v0);

    {
        std::unordered_set<std::uint64_t> skeys;
        for (const Pgl& s : Ssub) skeys.insert(s.key());
        std::size_t common = 0;
        for (const Pgl& n : Nsub) common += skeys.count(n.key());
        CheckReport r{"theta_anchor_sizes", b.p(), b.sys().gamma(), true, ""};
        std::uint64_t p = b.p();
        if (Bsub.size() != p * (p - 1) || Ssub.size() != 2 * (p - 1) ||
            Nsub.size() != 2 * (p + 1) || common != 4) {
            r.pass = false;
            std::ostringstream os;
            os << "|B|=" << Bsub.size() << " |S|=" << Ssub.size() << " |N|=" << Nsub.size()
               << " |N^S|=" << common;
            r.detail = os.str();
        }
        out.push_back(r);
    }

    CosetSpace GB = coset_space(geom, G, Bsub);
    CosetSpace GS = coset_space(geom, G, Ssub);
    CosetSpace GN = coset_space(geom, G, Nsub);

    IntMat iota0 = pushforward(b.points().size(), GB.size(), [&](std::size_t j) {
        return b.point_index(geom.act(GB.reps[j], A0));
    });
    IntMat iota_sp = pushforward(b.pairs().size(), GS.size(), [&](std::size_t j) {
        const Pgl& x = GS.reps[j];
        return b.pair_index(make_pair_sorted(geom.act(x, A0), geom.act(x, B0)));
    });
    IntMat iota_nsp = pushforward(b.necklaces().size(), GN.size(), [&](std::size_t j) {
        return b.necklace_index(Necklace(b.sys().apply(GN.reps[j], v0.rep())));
    });

    Pgl one = geom.identity();
    Pgl galpha = geom.canonical(Mat2{1, 1, 1, geom.field().neg(1)});

    out.push_back(report_eq("theta_psi", b, iota_sp * theta(geom, Bsub, one, Ssub, GB, GS) * iota0.transpose(),
                            map_psi(b)));
    out.push_back(report_eq("theta_mu", b, iota0 * theta(geom, Ssub, one, Bsub, GS, GB) * iota_sp.transpose(),
                            map_mu(b)));
    out.push_back(report_eq("theta_phi", b, iota_nsp * theta(geom, Ssub, one, Nsub, GS, GN) * iota_sp.transpose(),
                            map_phi(b)));
    out.push_back(report_eq("theta_lambda", b, iota_sp * theta(geom, Nsub, one, Ssub, GN, GS) * iota_nsp.transpose(),
                            map_lambda(b)));
    out.push_back(report_eq("theta_alpha", b, iota_sp * theta(geom, Ssub, galpha, Ssub, GS, GS) * iota_sp.transpose(),
                            map_alpha(b)));
    return out;
}

}  // namespace necklaces
