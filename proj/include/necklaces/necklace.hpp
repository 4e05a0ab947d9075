#pragma once

#include "necklaces/fq.hpp"
#include "necklaces/projline.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace necklaces {

// A cyclic arrangement of all p+1 points of P^1(F_p) turned one step by some
// element of C_gamma, stored in the canonical rotation: pearls()[0] is the
// smallest pearl in the point order (always the point 0 for a full necklace).
class OrientedNecklace {
public:
    OrientedNecklace() = default;
    // Rotates the cycle to canonical position; throws if pearls repeat.
    explicit OrientedNecklace(std::vector<ProjPoint> cycle);

    const std::vector<ProjPoint>& pearls() const { return pearls_; }
    std::size_t size() const { return pearls_.size(); }

    bool operator==(const OrientedNecklace&) const = default;
    auto operator<=>(const OrientedNecklace&) const = default;

private:
    std::vector<ProjPoint> pearls_;
};

// The same cycle worn the other way; again an oriented necklace.
OrientedNecklace reverse(const OrientedNecklace& v);

// A w-orbit {v, w(v)}, canonically represented by the lexicographically
// smaller of the two orientations.
class Necklace {
public:
    Necklace() = default;
    explicit Necklace(const OrientedNecklace& v);

    const OrientedNecklace& rep() const { return rep_; }
    std::size_t size() const { return rep_.size(); }

    bool operator==(const Necklace&) const = default;
    auto operator<=>(const Necklace&) const = default;

private:
    OrientedNecklace rep_;
};

// Unordered pair of distinct points, normalized to (first < second).
struct PointPair {
    ProjPoint first, second;

    bool operator==(const PointPair&) const = default;
    auto operator<=>(const PointPair&) const = default;
};

PointPair make_pair_sorted(ProjPoint A, ProjPoint B);

// The (p+1)/2 antipodal pairs {pearls[i], pearls[i + (p+1)/2]}, sorted.
// Reversal preserves antipodality, so this is well-defined on the w-orbit.
std::vector<PointPair> antipodal_pairs(const OrientedNecklace& v);
std::vector<PointPair> antipodal_pairs(const Necklace& v);

enum class StabilizerStatus { FixedPreservingOrientation, Flipped, Moved };

// A point of P^1(F_{p^2}) in value form: the class (x : y) is the value x/y,
// or infinity when y == 0.
struct Fq2Point {
    bool infinite = false;
    FqElement value{};

    bool operator==(const Fq2Point&) const = default;
    auto operator<=>(const Fq2Point&) const = default;
};

// Everything about gamma-necklaces for one fixed gamma.
class NecklaceSystem {
public:
    explicit NecklaceSystem(const GammaChoice& gamma) : geom_(gamma.p), quad_(gamma) {}

    const ProjGeom& geom() const { return geom_; }
    const QuadField& quad() const { return quad_; }
    const GammaChoice& gamma() const { return quad_.choice(); }
    std::uint32_t p() const { return geom_.p(); }

    // The constant cross-ratio t^2/(t^2 - n) of any four consecutive pearls.
    Fp xi() const;

    // The unique h in C_gamma with h(C0) = C1 and h(C1) = C2.
    Pgl turning_element(ProjPoint C0, ProjPoint C1, ProjPoint C2) const;

    // The unique oriented necklace C0 -> C1 -> C2, built by iterating the
    // turning element.
    OrientedNecklace build_from_triple(ProjPoint C0, ProjPoint C1, ProjPoint C2) const;

    // Same necklace via the recurrence C_{i+3} = solve_fourth(C_i, C_{i+1},
    // C_{i+2}, xi); an independent construction route.
    OrientedNecklace build_from_triple_recurrence(ProjPoint C0, ProjPoint C1,
                                                  ProjPoint C2) const;

    // The oriented necklace turned one pearl by h; requires h in C_gamma.
    OrientedNecklace orbit_of(const Pgl& h) const;

    // All p(p-1) oriented necklaces, sorted; each h in C_gamma contributes
    // its orbit, and that assignment is a bijection.
    std::vector<OrientedNecklace> enumerate_oriented() const;

    // Independent route: deduplicated build_from_triple_recurrence over all
    // ordered triples of distinct points, sorted.
    std::vector<OrientedNecklace> enumerate_oriented_recurrence() const;

    // All p(p-1)/2 necklaces, sorted.
    std::vector<Necklace> enumerate_necklaces() const;

    OrientedNecklace apply(const Pgl& g, const OrientedNecklace& v) const;
    StabilizerStatus stabilizer_status(const Pgl& g, const Necklace& v) const;

    // The embedding (C0, C1, C2, ...) -> <P (x) (-gamma) + Q (x) 1> into
    // P^1(F_{p^2}) \ P^1(F_p), with P, Q representing C0, C1 scaled so that
    // -n P + t Q represents C2.
    Fq2Point merelade(const OrientedNecklace& v) const;

    // Left action of PGL_2(F_p) on P^1(F_{p^2}).
    Fq2Point act(const Pgl& g, const Fq2Point& pt) const;

private:
    ProjGeom geom_;
    QuadField quad_;
};

// Discrete logarithm in F_{p^2}^x by baby-step/giant-step: the k in
// [0, p^2-1) with base^k = target; throws if base does not generate.
std::uint64_t discrete_log(const QuadField& K, const FqElement& base, const FqElement& target);

// The canonical bijection from gamma-necklaces to gamma'-necklaces,
// (C_0, C_1, ..., C_p) -> (C_0, C_k, C_{2k}, ...) where gamma' = gamma^k.
OrientedNecklace rebase_gamma(const OrientedNecklace& v, const QuadField& from,
                              const QuadField& to);
Necklace rebase_gamma(const Necklace& v, const QuadField& from, const QuadField& to);

// Position of v in a sorted necklace list; throws if absent.
std::size_t index_of(const std::vector<Necklace>& sorted, const Necklace& v);

}  // namespace necklaces
