#include "necklaces/pairing.hpp"

#include "necklaces/reference_data.hpp"

#include <algorithm>
#include <sstream>

namespace necklaces {

std::int64_t pairing_value(const Necklace& v, const Necklace& w) {
    auto pv = antipodal_pairs(v);
    auto pw = antipodal_pairs(w);
    std::vector<PointPair> common;
    std::set_intersection(pv.begin(), pv.end(), pw.begin(), pw.end(),
                          std::back_inserter(common));
    return static_cast<std::int64_t>(common.size());
}

IntMat pairing_matrix(const std::vector<Necklace>& sorted_necklaces) {
    const std::size_t n = sorted_necklaces.size();
    std::vector<std::vector<PointPair>> pairs(n);
    for (std::size_t i = 0; i < n; ++i) pairs[i] = antipodal_pairs(sorted_necklaces[i]);
    IntMat M(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        M(i, i) = static_cast<std::int64_t>(pairs[i].size());
        for (std::size_t j = i + 1; j < n; ++j) {
            std::int64_t c = 0;
            auto a = pairs[i].begin(), b = pairs[j].begin();
            while (a != pairs[i].end() && b != pairs[j].end()) {
                if (*a < *b)
                    ++a;
                else if (*b < *a)
                    ++b;
                else {
                    ++c;
                    ++a;
                    ++b;
                }
            }
            M(i, j) = M(j, i) = c;
        }
    }
    return M;
}

CharpolyCheck verify_charpoly_table(const NecklaceSystem& sys) {
    CharpolyCheck out;
    out.p = sys.p();
    out.computed = charpoly(pairing_matrix(sys.enumerate_necklaces()));
    if (!reference::has_charpoly(out.p)) return out;
    out.supported = true;
    const auto& factors = reference::charpoly_factors(out.p);
    out.expected = expand_factors(factors);
    out.factored = factors_to_string(factors);
    out.pass = poly_equal(out.computed, out.expected);
    if (!out.pass) {
        std::size_t n = std::max(out.computed.size(), out.expected.size());
        for (std::size_t k = 0; k < n; ++k) {
            mpz_class got = k < out.computed.size() ? out.computed[k] : mpz_class(0);
            mpz_class want = k < out.expected.size() ? out.expected[k] : mpz_class(0);
            if (got != want) {
                std::ostringstream os;
                os << "coefficient of X^" << k << ": got " << got.get_str() << ", want "
                   << want.get_str();
                out.detail = os.str();
                break;
            }
        }
    }
    return out;
}

}  // namespace necklaces
