#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace necklaces {

// Dense integer matrix. Entries throughout the project are small (bounded by
// the basis sizes), so int64 never overflows here.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMat ones(std::size_t rows, std::size_t cols) { return IntMat(rows, cols, 1); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat&) const = default;

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMat: shape mismatch in product");
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::int64_t v = (*this)(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    IntMat operator+(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMat: shape mismatch in sum");
        IntMat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    IntMat operator-(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMat: shape mismatch in difference");
        IntMat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    IntMat scaled(std::int64_t s) const {
        IntMat r = *this;
        for (auto& v : r.a_) v *= s;
        return r;
    }

    std::int64_t row_sum(std::size_t i) const {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
        return s;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

}  // namespace necklaces
