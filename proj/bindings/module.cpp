#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "necklaces/invariants.hpp"
#include "necklaces/pairing.hpp"
#include "necklaces/reference_data.hpp"
#include "necklaces/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace necklaces;

namespace {

GammaChoice resolve(std::uint32_t p, std::optional<std::pair<Fp, Fp>> gamma) {
    if (gamma) return find_gamma(p, gamma->first, gamma->second);
    return find_gamma(p);
}

// Points are exposed as python ints, with p standing for infinity.
std::vector<int> to_ids(const OrientedNecklace& v) {
    std::vector<int> out;
    for (ProjPoint P : v.pearls()) out.push_back(int(P.id));
    return out;
}

py::object big(const mpz_class& z) {
    return py::cast<py::object>(py::int_(py::str(z.get_str())));
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["identity_name"] = r.name;
    d["p"] = r.p;
    if (r.gamma) d["gamma"] = py::make_tuple(r.gamma->t, r.gamma->n);
    d["status"] = r.pass ? "pass" : "fail";
    if (!r.pass && !r.detail.empty()) d["first_mismatch"] = r.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations with necklace level structures over P^1(F_p)";

    m.def(
        "find_gamma",
        [](std::uint32_t p, std::optional<std::pair<Fp, Fp>> gamma) {
            GammaChoice g = resolve(p, gamma);
            return std::make_pair(g.t, g.n);
        },
        py::arg("p"), py::arg("gamma") = std::nullopt,
        "Deterministic generator choice (t, n), or a validated override.");

    m.def(
        "xi",
        [](std::uint32_t p, std::optional<std::pair<Fp, Fp>> gamma) {
            return NecklaceSystem(resolve(p, gamma)).xi();
        },
        py::arg("p"), py::arg("gamma") = std::nullopt,
        "Constant cross-ratio of four consecutive pearls.");

    m.def(
        "necklaces",
        [](std::uint32_t p, std::optional<std::pair<Fp, Fp>> gamma, bool oriented) {
            NecklaceSystem sys(resolve(p, gamma));
            std::vector<std::vector<int>> out;
            if (oriented) {
                for (const auto& v : sys.enumerate_oriented()) out.push_back(to_ids(v));
            } else {
                for (const auto& v : sys.enumerate_necklaces()) out.push_back(to_ids(v.rep()));
            }
            return out;
        },
        py::arg("p"), py::arg("gamma") = std::nullopt, py::arg("oriented") = false,
        "Sorted necklace listing; the value p stands for the point at infinity.");

    m.def(
        "build_from_triple",
        [](std::uint32_t p, std::vector<std::uint32_t> triple,
           std::optional<std::pair<Fp, Fp>> gamma) {
            if (triple.size() != 3) throw std::invalid_argument("triple must have 3 points");
            NecklaceSystem sys(resolve(p, gamma));
            return to_ids(sys.build_from_triple(ProjPoint{triple[0]}, ProjPoint{triple[1]},
                                                ProjPoint{triple[2]}));
        },
        py::arg("p"), py::arg("triple"), py::arg("gamma") = std::nullopt,
        "The unique oriented necklace through the given distinct points.");

    m.def(
        "pairing_matrix",
        [](std::uint32_t p, std::optional<std::pair<Fp, Fp>> gamma) {
            NecklaceSystem sys(resolve(p, gamma));
            IntMat M = pairing_matrix(sys.enumerate_necklaces());
            std::vector<std::vector<std::int64_t>> rows(M.rows());
            for (std::size_t i = 0; i < M.rows(); ++i)
                for (std::size_t j = 0; j < M.cols(); ++j) rows[i].push_back(M(i, j));
            return rows;
        },
        py::arg("p"), py::arg("gamma") = std::nullopt,
        "Gram matrix of the antipodal pairing over sorted necklaces.");

    m.def(
        "charpoly",
        [](std::uint32_t p, std::optional<std::pair<Fp, Fp>> gamma) {
            NecklaceSystem sys(resolve(p, gamma));
            IntPoly f = charpoly(pairing_matrix(sys.enumerate_necklaces()));
            py::list out;
            for (const auto& c : f) out.append(big(c));
            return out;
        },
        py::arg("p"), py::arg("gamma") = std::nullopt,
        "Exact characteristic polynomial coefficients, constant term first.");

    m.def(
        "charpoly_reference",
        [](std::uint32_t p) -> py::object {
            if (!reference::has_charpoly(p)) return py::none();
            IntPoly f = expand_factors(reference::charpoly_factors(p));
            py::list out;
            for (const auto& c : f) out.append(big(c));
            return out;
        },
        py::arg("p"), "Expanded reference polynomial, or None when not tabulated.");

    m.def(
        "pairing_det",
        [](std::uint32_t p, std::optional<std::pair<Fp, Fp>> gamma) {
            NecklaceSystem sys(resolve(p, gamma));
            auto [rank, det] = rank_and_det(pairing_matrix(sys.enumerate_necklaces()));
            return py::make_tuple(rank, big(det));
        },
        py::arg("p"), py::arg("gamma") = std::nullopt, "Exact (rank, determinant).");

    m.def(
        "elliptic_counts",
        [](std::uint32_t p, std::optional<std::pair<Fp, Fp>> gamma) {
            EllipticCounts brute = count_elliptic_bruteforce(NecklaceSystem(resolve(p, gamma)));
            EllipticCounts closed = count_elliptic_closed(p);
            py::dict d;
            d["brute"] = py::make_tuple(brute.e2, brute.e3, brute.e2_plus, brute.e3_plus);
            d["closed"] = py::make_tuple(closed.e2, closed.e3, closed.e2_plus, closed.e3_plus);
            return d;
        },
        py::arg("p"), py::arg("gamma") = std::nullopt,
        "(e2, e3, e2+, e3+) by exhaustive scan and by the closed forms.");

    m.def(
        "curve_invariants",
        [](std::uint32_t p) {
            py::list out;
            for (CurveTag tag :
                 {CurveTag::Xnsp, CurveTag::XnspPlus, CurveTag::X0, CurveTag::XspPlus}) {
                CurveInvariants ci = curve_invariants(p, tag);
                py::dict d;
                d["curve"] = curve_name(tag);
                d["d"] = ci.degree;
                d["e2"] = ci.e2;
                d["e3"] = ci.e3;
                d["e_inf"] = ci.e_inf;
                d["genus"] = ci.genus;
                out.append(d);
            }
            return out;
        },
        py::arg("p"), "Degree, elliptic point counts, cusps and genus of the four curves.");

    m.def(
        "genus",
        [](std::uint32_t p, const std::string& curve) {
            for (CurveTag tag :
                 {CurveTag::Xnsp, CurveTag::XnspPlus, CurveTag::X0, CurveTag::XspPlus})
                if (curve_name(tag) == curve) return genus_closed_form(p, tag);
            throw std::invalid_argument("unknown curve: " + curve);
        },
        py::arg("p"), py::arg("curve"), "Genus by the closed form; curves: Xnsp, Xnsp+, X0, Xsp+.");

    m.def(
        "verify",
        [](std::uint32_t p, const std::string& suite, std::optional<std::pair<Fp, Fp>> gamma) {
            VerifyOptions opt;
            if (gamma) opt.gamma = find_gamma(p, gamma->first, gamma->second);
            py::list out;
            for (const CheckReport& r : run_suite(suite, p, opt)) out.append(report_dict(r));
            return out;
        },
        py::arg("p"), py::arg("suite") = "all", py::arg("gamma") = std::nullopt,
        "Run an identity-check suite; returns one dict per check.");

    m.def("suites", [] { return suite_names(); }, "Names of the available verify suites.");
}
