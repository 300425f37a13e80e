#pragma once

#include <cstddef>
#include <vector>

#include "rmks/error.hpp"

namespace rmks {

// Dense matrix over an exact coefficient type (mpq_class, mpz_class, FieldElement).
// Entry types without a usable default constructor are supported: every
// constructor takes a fill value and the algorithms derive 0/1 from entries.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t r, size_t c, const T& fill) : rows_(r), cols_(c), data_(r * c, fill) {}

    static Mat identity(size_t n, const T& one, const T& zero) {
        Mat m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat transpose() const {
        if (empty()) { Mat m; m.rows_ = cols_; m.cols_ = rows_; return m; }
        Mat m(cols_, rows_, data_[0]);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw Error("ShapeMismatch", "matrix product shapes");
        if (empty() || o.empty()) {
            Mat m; m.rows_ = rows_; m.cols_ = o.cols_;
            if (rows_ && o.cols_) throw Error("ShapeMismatch", "product over empty inner dim needs a zero");
            return m;
        }
        const T zero = data_[0] - data_[0];
        Mat m(rows_, o.cols_, zero);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                for (size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
            }
        return m;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat m(*this);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
        return m;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat m(*this);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
        return m;
    }

    Mat scaled(const T& c) const {
        Mat m(*this);
        for (auto& x : m.data_) x = x * c;
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw Error("ShapeMismatch", "matrix-vector shapes");
        std::vector<T> out;
        out.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i) {
            T acc = at(i, 0) * v[0];
            for (size_t j = 1; j < cols_; ++j) acc += at(i, j) * v[j];
            out.push_back(acc);
        }
        return out;
    }

    std::vector<T> row(size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
        return out;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error("ShapeMismatch", "matrix shapes differ");
    }
};

template <class T>
bool entry_is_zero(const T& x) { return x == 0; } // FieldElement provides its own overload

template <class T>
T zero_like(const T& x) { return x - x; }

template <class T>
T one_like(const T& x) {
    T z = x - x;
    z += 1;
    return z;
}

// Gaussian elimination determinant; T must be a field.
template <class T>
T det(Mat<T> m) {
    if (m.rows() != m.cols()) throw Error("ShapeMismatch", "determinant of non-square");
    if (m.rows() == 0) throw Error("ShapeMismatch", "determinant of empty matrix");
    const size_t n = m.rows();
    T result = one_like(m.at(0, 0));
    bool negate = false;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && entry_is_zero(m.at(piv, k))) ++piv;
        if (piv == n) return zero_like(m.at(0, 0)); // singular -> 0
        if (piv != k) { m.swap_rows(piv, k); negate = !negate; }
        result = result * m.at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (entry_is_zero(m.at(i, k))) continue;
            T f = m.at(i, k) / m.at(k, k);
            for (size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    if (negate) result = -result;
    return result;
}

namespace detail {

// Row-reduce [m | rhs] in place; returns pivot columns of m.
template <class T>
std::vector<size_t> row_echelon(Mat<T>& m, Mat<T>* rhs) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && entry_is_zero(m.at(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        if (rhs) rhs->swap_rows(piv, r);
        T inv_piv = m.at(r, c);
        for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) / inv_piv;
        if (rhs)
            for (size_t j = 0; j < rhs->cols(); ++j) rhs->at(r, j) = rhs->at(r, j) / inv_piv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || entry_is_zero(m.at(i, c))) continue;
            T f = m.at(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
            if (rhs)
                for (size_t j = 0; j < rhs->cols(); ++j) rhs->at(i, j) -= f * rhs->at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

template <class T>
size_t rank(Mat<T> m) {
    if (m.empty()) return 0;
    return detail::row_echelon(m, static_cast<Mat<T>*>(nullptr)).size();
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw Error("ShapeMismatch", "inverse of non-square");
    const size_t n = m.rows();
    const T zero = zero_like(m.at(0, 0));
    const T one = one_like(m.at(0, 0));
    Mat<T> a(m), rhs = Mat<T>::identity(n, one, zero);
    auto pivots = detail::row_echelon(a, &rhs);
    if (pivots.size() != n) throw Error("Singular", "matrix not invertible");
    return rhs;
}

template <class T>
bool is_invertible(const Mat<T>& m) {
    if (m.rows() != m.cols()) return false;
    if (m.empty()) return true;
    return rank(m) == m.rows();
}

// Basis of the right kernel {v : m v = 0}; each element is a column vector.
template <class T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m) {
    const size_t n = m.cols();
    if (m.empty() || m.rows() == 0) {
        // no constraints: standard basis, only constructible when an entry exists
        throw Error("ShapeMismatch", "kernel of empty matrix needs explicit field context");
    }
    const T zero = zero_like(m.at(0, 0));
    const T one = one_like(m.at(0, 0));
    auto pivots = detail::row_echelon(m, static_cast<Mat<T>*>(nullptr));
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<T> v(n, zero);
        v[free_c] = one;
        for (size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < n) v[pivots[r]] = -m.at(r, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve m x = b; throws if inconsistent or underdetermined solution is not unique?
// Returns one solution of the consistent system (least free variables set to 0).
template <class T>
std::vector<T> solve(Mat<T> m, std::vector<T> b) {
    if (m.rows() != b.size()) throw Error("ShapeMismatch", "solve shapes");
    if (m.empty()) throw Error("ShapeMismatch", "solve with empty matrix");
    const T zero = zero_like(m.at(0, 0));
    Mat<T> rhs(b.size(), 1, zero);
    for (size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
    auto pivots = detail::row_echelon(m, &rhs);
    // consistency: zero rows of m must have zero rhs
    for (size_t i = pivots.size(); i < m.rows(); ++i)
        if (!entry_is_zero(rhs.at(i, 0)))
            throw Error("Inconsistent", "linear system has no solution");
    std::vector<T> x(m.cols(), zero);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs.at(r, 0);
    return x;
}

template <class T>
Mat<T> block_diag(const std::vector<Mat<T>>& blocks, const T& zero) {
    size_t n = 0, c = 0;
    for (const auto& b : blocks) { n += b.rows(); c += b.cols(); }
    Mat<T> m(n, c, zero);
    size_t ri = 0, ci = 0;
    for (const auto& b : blocks) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) m.at(ri + i, ci + j) = b.at(i, j);
        ri += b.rows();
        ci += b.cols();
    }
    return m;
}

} // namespace rmks
