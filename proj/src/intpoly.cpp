#include "necklaces/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace necklaces {

IntPoly poly_normalize(IntPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

IntPoly poly_add(const IntPoly& f, const IntPoly& g) {
    IntPoly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    return poly_normalize(std::move(r));
}

IntPoly poly_sub(const IntPoly& f, const IntPoly& g) {
    IntPoly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    return poly_normalize(std::move(r));
}

IntPoly poly_mul(const IntPoly& f, const IntPoly& g) {
    if (f.empty() || g.empty()) return {};
    IntPoly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    }
    return poly_normalize(std::move(r));
}

IntPoly poly_pow(const IntPoly& f, unsigned e) {
    IntPoly r{1};
    IntPoly base = f;
    while (e) {
        if (e & 1) r = poly_mul(r, base);
        base = poly_mul(base, base);
        e >>= 1;
    }
    return r;
}

bool poly_equal(const IntPoly& f, const IntPoly& g) {
    return poly_normalize(f) == poly_normalize(g);
}

std::string poly_to_string(const IntPoly& f) {
    IntPoly p = poly_normalize(f);
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const mpz_class& c = p[k];
        if (c == 0) continue;
        mpz_class abs = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = abs == 1;
        if (k == 0) {
            os << abs;
        } else {
            if (!unit) os << abs << "*";
            os << "X";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

IntPoly expand_factors(const std::vector<PolyFactor>& factors) {
    IntPoly r{1};
    for (const PolyFactor& f : factors) r = poly_mul(r, poly_pow(f.base, f.mult));
    return r;
}

std::string factors_to_string(const std::vector<PolyFactor>& factors) {
    std::ostringstream os;
    bool first = true;
    for (const PolyFactor& f : factors) {
        if (!first) os << "*";
        first = false;
        os << "(" << poly_to_string(f.base) << ")";
        if (f.mult != 1) os << "^" << f.mult;
    }
    return os.str();
}

namespace {

// acc += v * x without temporaries.
inline void addmul_si(mpz_class& acc, std::int64_t v, const mpz_class& x) {
    if (v > 0)
        mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(v));
    else if (v < 0)
        mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-v));
}

}  // namespace

IntPoly charpoly(const IntMat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("charpoly: matrix must be square");
    const std::size_t n = M.rows();
    if (n == 0) return {1};

    // Samuelson-Berkowitz: fold in one row/column at a time, multiplying the
    // coefficient vector by a lower-triangular Toeplitz matrix built from the
    // Krylov products  row * A_r^j * col.
    std::vector<mpz_class> coeff{1, -mpz_class(M(0, 0))};  // high-to-low
    std::vector<mpz_class> krylov, next, toeplitz, out;
    for (std::size_t r = 1; r < n; ++r) {
        toeplitz.assign(r + 2, mpz_class(0));
        toeplitz[0] = 1;
        toeplitz[1] = -mpz_class(M(r, r));
        krylov.assign(r, mpz_class(0));
        for (std::size_t i = 0; i < r; ++i) krylov[i] = M(i, r);
        for (std::size_t j = 0; j < r; ++j) {
            mpz_class dot = 0;
            for (std::size_t i = 0; i < r; ++i) addmul_si(dot, M(r, i), krylov[i]);
            toeplitz[j + 2] = -dot;
            if (j + 1 == r) break;
            next.assign(r, mpz_class(0));
            for (std::size_t k = 0; k < r; ++k) {
                mpz_class& acc = next[k];
                for (std::size_t i = 0; i < r; ++i)
                    if (krylov[i] != 0) addmul_si(acc, M(k, i), krylov[i]);
            }
            krylov.swap(next);
        }
        out.assign(r + 2, mpz_class(0));
        for (std::size_t i = 0; i < r + 2; ++i) {
            mpz_class& acc = out[i];
            std::size_t jlo = i + 1 >= toeplitz.size() ? i + 1 - toeplitz.size() : 0;
            for (std::size_t j = jlo; j < coeff.size() && j <= i; ++j)
                mpz_addmul(acc.get_mpz_t(), toeplitz[i - j].get_mpz_t(), coeff[j].get_mpz_t());
        }
        coeff.swap(out);
    }
    return IntPoly(coeff.rbegin(), coeff.rend());
}

std::pair<std::size_t, mpz_class> rank_and_det(const IntMat& M) {
    const std::size_t rows = M.rows(), cols = M.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = M(i, j);

    mpz_class prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;  // rank-deficient column
        if (piv != r) {
            std::swap(a[piv], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("rank_and_det: inexact Bareiss division");
                a[i][j] = q;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    mpz_class det = 0;
    if (rows == cols && r == rows) det = sign > 0 ? prev : mpz_class(-prev);
    return {r, det};
}

}  // namespace necklaces
