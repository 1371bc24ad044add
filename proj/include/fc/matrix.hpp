#pragma once

#include <cassert>
#include <unordered_map>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fc {

struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("matrix is singular") {}
};

// Dense matrix over an exact commutative ring R. Field-only operations
// (inverse, det, kernel) require R to provide inverse() on nonzero elements.
template <class R>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = R(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    R& at(size_t i, size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const R& at(size_t i, size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        assert(a.cols_ == b.rows_);
        Mat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const R& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat r = a;
        for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat r = a;
        for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Mat operator*(const R& c, const Mat& m) {
        Mat r = m;
        for (auto& x : r.data_) x = c * x;
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? R(1) : R(0))) return false;
        return true;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Kronecker product, row-major nesting: (i_a, i_b) -> i_a * b.rows + i_b.
    static Mat kron(const Mat& a, const Mat& b) {
        Mat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (size_t k = 0; k < b.rows_; ++k)
                    for (size_t l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
            }
        return r;
    }

    static Mat direct_sum(const Mat& a, const Mat& b) {
        Mat r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (size_t i = 0; i < b.rows_; ++i)
            for (size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    // Row-echelon reduction in place (field R). Returns the rank and fills
    // pivot column indices.
    size_t rref(std::vector<size_t>* pivots = nullptr) {
        size_t rank = 0;
        if (pivots) pivots->clear();
        for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
            size_t piv = rank;
            while (piv < rows_ && at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            if (piv != rank)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
            R inv = at(rank, col).inverse();
            for (size_t j = col; j < cols_; ++j) at(rank, j) = inv * at(rank, j);
            for (size_t i = 0; i < rows_; ++i) {
                if (i == rank || at(i, col).is_zero()) continue;
                R f = at(i, col);
                for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(rank, j);
            }
            if (pivots) pivots->push_back(col);
            ++rank;
        }
        return rank;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<R> data_;
};

template <class R>
R det(Mat<R> m) {
    assert(m.rows() == m.cols());
    R result(1);
    size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m.at(piv, col).is_zero()) ++piv;
        if (piv == n) return R(0);
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            result = -result;
        }
        result *= m.at(col, col);
        R inv = m.at(col, col).inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            R f = inv * m.at(i, col);
            for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return result;
}

template <class R>
Mat<R> inverse(const Mat<R>& m) {
    assert(m.rows() == m.cols());
    size_t n = m.rows();
    Mat<R> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = R(1);
    }
    std::vector<size_t> pivots;
    aug.rref(&pivots);
    // singular iff some pivot escapes the left block
    for (size_t i = 0; i < n; ++i)
        if (i >= pivots.size() || pivots[i] != i) throw SingularMatrix();
    Mat<R> r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

// Division-free determinant by cofactor expansion with column-mask
// memoization; usable over polynomial rings. Intended for small n.
template <class R>
R det_cofactor(const Mat<R>& m) {
    assert(m.rows() == m.cols());
    const size_t n = m.rows();
    if (n == 0) return R(1);
    std::vector<std::unordered_map<unsigned, R>> cache(n);
    struct Rec {
        const Mat<R>& m;
        size_t n;
        std::vector<std::unordered_map<unsigned, R>>& cache;
        R run(size_t row, unsigned mask) {
            if (row == n) return R(1);
            auto it = cache[row].find(mask);
            if (it != cache[row].end()) return it->second;
            R sum(0);
            int sign = 1;
            for (size_t col = 0; col < n; ++col) {
                if (mask & (1u << col)) continue;
                if (!m.at(row, col).is_zero()) {
                    R sub = run(row + 1, mask | (1u << col));
                    R term = m.at(row, col) * sub;
                    sum = sign > 0 ? sum + term : sum - term;
                }
                sign = -sign;
            }
            cache[row][mask] = sum;
            return sum;
        }
    } rec{m, n, cache};
    return rec.run(0, 0);
}

// Basis of the right kernel {x : m x = 0} (field R).
template <class R>
std::vector<std::vector<R>> kernel_basis(Mat<R> m) {
    std::vector<size_t> pivots;
    m.rref(&pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<R>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<R> v(m.cols(), R(0));
        v[free_col] = R(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace fc
