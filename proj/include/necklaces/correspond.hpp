#pragma once

#include "necklaces/intmat.hpp"
#include "necklaces/necklace.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace necklaces {

// Outcome of one exact identity check.
struct CheckReport {
    std::string name;
    std::uint32_t p = 0;
    std::optional<GammaChoice> gamma;
    bool pass = false;
    std::string detail;  // first mismatch when failing, empty otherwise
};

// The four ordered divisor bases over a fixed fibre: points of P^1(F_p),
// unordered pairs, ordered distinct triples, and gamma-necklaces. Triples
// grow cubically, so they are materialized only on request (default p <= 13).
class Bases {
public:
    explicit Bases(const GammaChoice& gamma,
                   std::optional<bool> with_triples = std::nullopt);

    const NecklaceSystem& sys() const { return sys_; }
    const ProjGeom& geom() const { return sys_.geom(); }
    std::uint32_t p() const { return sys_.p(); }

    const std::vector<ProjPoint>& points() const { return points_; }
    const std::vector<PointPair>& pairs() const { return pairs_; }
    const std::vector<std::array<ProjPoint, 3>>& triples() const;
    const std::vector<Necklace>& necklaces() const { return necklaces_; }

    std::size_t point_index(ProjPoint P) const { return P.id; }
    std::size_t pair_index(const PointPair& q) const;
    std::size_t triple_index(const std::array<ProjPoint, 3>& t) const;
    std::size_t necklace_index(const Necklace& v) const { return index_of(necklaces_, v); }

    // Antipodal pairs of necklace #i (sorted), and the necklaces containing a
    // given pair as antipodal.
    const std::vector<PointPair>& necklace_antipodals(std::size_t i) const {
        return necklace_antipodals_[i];
    }
    const std::vector<std::size_t>& necklaces_with_pair(std::size_t pair_idx) const {
        return pair_to_necklaces_[pair_idx];
    }

    bool has_triples() const { return has_triples_; }

private:
    NecklaceSystem sys_;
    std::vector<ProjPoint> points_;
    std::vector<PointPair> pairs_;
    std::vector<std::array<ProjPoint, 3>> triples_;
    std::vector<Necklace> necklaces_;
    std::vector<std::vector<PointPair>> necklace_antipodals_;
    std::vector<std::vector<std::size_t>> pair_to_necklaces_;
    std::unordered_map<std::uint64_t, std::size_t> triple_lookup_;
    bool has_triples_ = false;
};

// --- the divisor-level correspondences (matrices are target x source) ---

// psi: Points -> Pairs, A |-> sum of {A,B} over B != A.
IntMat map_psi(const Bases& b);
// mu: Pairs -> Points, {A,B} |-> (A) + (B).
IntMat map_mu(const Bases& b);
// phi: Pairs -> Necklaces, {A,B} |-> sum of necklaces with A antipodal to B.
IntMat map_phi(const Bases& b);
// lambda: Necklaces -> Pairs, v |-> sum of its antipodal pairs.
IntMat map_lambda(const Bases& b);
// alpha: Pairs -> Pairs, {A,B} |-> sum of {C,D} with [A,B;C,D] = -1.
IntMat map_alpha(const Bases& b);

// --- degeneracy maps on triples ---

inline ProjPoint pi_0(const std::array<ProjPoint, 3>& t) { return t[0]; }
inline PointPair pi_sp(const std::array<ProjPoint, 3>& t) { return make_pair_sorted(t[0], t[1]); }
OrientedNecklace pi_nsp_oriented(const Bases& b, const std::array<ProjPoint, 3>& t);
// D is the unique fourth point with [A,B;C,D] = epsilon (epsilon a fixed
// non-square); the result is the unique necklace with A<->B and C<->D.
Necklace tilde_pi_nsp(const Bases& b, const std::array<ProjPoint, 3>& t, Fp epsilon);

// f_* sends basis element e to f(e); f^* is its transpose.
IntMat pushforward(std::size_t target_size, std::size_t source_size,
                   const std::function<std::size_t(std::size_t)>& f);
inline IntMat pullback(const IntMat& pushforward_matrix) { return pushforward_matrix.transpose(); }

IntMat pushforward_pi0(const Bases& b);                      // points x triples
IntMat pushforward_pi_sp(const Bases& b);                    // pairs x triples
IntMat pushforward_tilde_pi_nsp(const Bases& b, Fp epsilon);  // necklaces x triples

// --- permutation matrices of the PGL action on each basis ---

IntMat perm_points(const Bases& b, const Pgl& g);
IntMat perm_pairs(const Bases& b, const Pgl& g);
IntMat perm_necklaces(const Bases& b, const Pgl& g);

// --- subgroups, coset spaces and double-coset operators ---

std::vector<Pgl> stabilizer_of_point(const ProjGeom& geom, ProjPoint A);
std::vector<Pgl> stabilizer_of_pair(const ProjGeom& geom, const PointPair& q);
// Elements fixing or flipping the necklace (the full stabilizer of the
// w-orbit), of order 2(p+1).
std::vector<Pgl> stabilizer_of_necklace(const NecklaceSystem& sys, const Necklace& v);

// Left cosets gH in enumeration order of canonical representatives.
struct CosetSpace {
    std::vector<Pgl> reps;  // minimal element of each coset, sorted
    std::unordered_map<std::uint64_t, std::size_t> coset_of;  // element key -> index

    std::size_t index(const Pgl& g) const { return coset_of.at(g.key()); }
    std::size_t size() const { return reps.size(); }
};

CosetSpace coset_space(const ProjGeom& geom, const std::vector<Pgl>& group,
                       const std::vector<Pgl>& subgroup);

// Theta(H g H'): Q[G/H] -> Q[G/H'], xH |-> sum_{s} x s H' where
// H g H' = disjoint union of the cosets s H'.
IntMat theta(const ProjGeom& geom, const std::vector<Pgl>& H, const Pgl& g,
             const std::vector<Pgl>& Hprime, const CosetSpace& source,
             const CosetSpace& target);

// --- exact identity checks ---

CheckReport verify_mu_psi(const Bases& b);             // mu.psi = (p-1) I + J
CheckReport verify_phi_psi(const Bases& b);            // phi.psi = all-ones
CheckReport verify_mu_lambda(const Bases& b);          // mu.lambda = all-ones
CheckReport verify_laphi_column(const Bases& b);       // lambda.phi column formula
CheckReport verify_alphaalpha_column(const Bases& b);  // alpha^2 column formula
CheckReport verify_chen86(const Bases& b);  // lambda.phi + alpha^2 + psi.mu = p I + J
CheckReport verify_phi_lambda_is_pairing(const Bases& b);

// (p-1) psi = (pi_sp)_* (pi_0)^*, (p-1) mu = (pi_0)_* (pi_sp)^*,
// 4 phi = (tilde_pi_nsp)_* (pi_sp)^*, 4 lambda = (pi_sp)_* (tilde_pi_nsp)^*.
std::vector<CheckReport> verify_degeneracy(const Bases& b, std::optional<Fp> epsilon = {});

// The five double-coset identities plus |N and S| = 4, with the anchors
// A0 = 0, B0 = infinity, v0 = smallest necklace with A0 <-> B0.
std::vector<CheckReport> verify_theta_lemma(const Bases& b);

}  // namespace necklaces
