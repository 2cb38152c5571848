#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "srt/rng.hpp"

namespace srt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense matrix over Q. Everything downstream needs exact ranks, so there is
// no floating point anywhere in the library.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}

    Mat(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            assert(row.size() == cols_);
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }
    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }
    Mat operator*(const Rat& s) const {
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    void set_block(std::size_t i0, std::size_t j0, const Mat& b) {
        assert(i0 + b.rows_ <= rows_ && j0 + b.cols_ <= cols_);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    Mat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        assert(i0 + r <= rows_ && j0 + c <= cols_);
        Mat b(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    Mat col(std::size_t j) const { return block(0, j, rows_, 1); }
    Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

inline Mat hstack(const Mat& a, const Mat& b) {
    assert(a.rows() == b.rows());
    Mat r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

inline Mat vstack(const Mat& a, const Mat& b) {
    assert(a.cols() == b.cols());
    Mat r(a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
// integers; thereafter every intermediate entry is a minor of that integer
// matrix, so the division by the previous pivot is exact even when pivot
// columns are skipped.
inline std::size_t rank(const Mat& a) {
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<std::vector<Int>> m(R, std::vector<Int>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < C; ++j)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(a(i, j)));
        for (std::size_t j = 0; j < C; ++j) {
            Rat v = a(i, j) * Rat(l);
            assert(boost::multiprecision::denominator(v) == 1);
            m[i][j] = boost::multiprecision::numerator(v);
        }
    }
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

// Reduced row echelon form; returns the pivot column indices alongside.
inline std::pair<Mat, std::vector<std::size_t>> rref(Mat m) {
    std::vector<std::size_t> pivots;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
        const Rat inv = Rat(1) / m(r, c);
        for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat f = m(i, c);
            for (std::size_t j = c; j < C; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// Columns span ker(a); width is cols - rank.
inline Mat nullspace(const Mat& a) {
    auto [rr, piv] = rref(a);
    const std::size_t C = a.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat ker(C, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        ker(f, k) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) ker(piv[i], k) = -rr(i, f);
    }
    return ker;
}

// Some solution of a x = b, or nullopt if inconsistent (free coords = 0).
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
    assert(a.rows() == b.rows() && b.cols() == 1);
    auto [rr, piv] = rref(hstack(a, b));
    for (auto c : piv)
        if (c == a.cols()) return std::nullopt;
    Mat x(a.cols(), 1);
    for (std::size_t i = 0; i < piv.size(); ++i) x(piv[i], 0) = rr(i, a.cols());
    return x;
}

inline Mat inverse(const Mat& a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    auto [rr, piv] = rref(hstack(a, Mat::identity(n)));
    assert(piv.size() == n && (piv.empty() || piv.back() == n - 1));
    return rr.block(0, n, n, n);
}

// Original columns of a sitting at the rref pivot positions.
inline Mat column_space_basis(const Mat& a) {
    auto piv = rref(a).second;
    Mat b(a.rows(), piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) b(i, k) = a(i, piv[k]);
    return b;
}

inline Mat random_int_mat(std::size_t r, std::size_t c, Rng& rng,
                          long long lo = -9, long long hi = 9) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.range(lo, hi);
    return m;
}

} // namespace srt
