#pragma once

#include "errors.hpp"
#include "traits.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charclass {

// Dense row-major matrix over an exact scalar type. The zero element is
// stored alongside the entries because scalars such as RatFun carry their
// characteristic at runtime.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(RingTraits<T>::zero(zero)), data_(rows * cols, zero_) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& zero)
    {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows[0].size();
        Matrix m(r, c, zero);
        for (std::size_t i = 0; i < r; ++i) {
            require(rows[i].size() == c, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n, const T& zero)
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<T>::one(zero);
        return m;
    }

    static Matrix column(const std::vector<T>& v, const T& zero)
    {
        Matrix m(v.size(), 1, zero);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!(x == zero_)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        check_shape(a, b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] = a.data_[k] + b.data_[k];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        check_shape(a, b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] = a.data_[k] - b.data_[k];
        return a;
    }

    friend Matrix operator-(Matrix a)
    {
        for (auto& x : a.data_) x = a.zero_ - x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        require(a.cols_ == b.rows_, "matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == a.zero_) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!(b(k, j) == a.zero_)) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const T& s, Matrix a)
    {
        for (auto& x : a.data_) x = s * x;
        return a;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        require(a.cols_ == v.size(), "matrix-vector shape mismatch");
        std::vector<T> r(a.rows_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!(a(i, j) == a.zero_) && !(v[j] == a.zero_)) r[i] = r[i] + a(i, j) * v[j];
        return r;
    }

private:
    static void check_shape(const Matrix& a, const Matrix& b)
    {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch");
    }

    std::size_t rows_;
    std::size_t cols_;
    T zero_;
    std::vector<T> data_;
};

template <class T, class F>
Matrix<T> map(const Matrix<T>& a, F&& f)
{
    Matrix<T> r(a.rows(), a.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f(a(i, j));
    return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a)
{
    Matrix<T> r(a.cols(), a.rows(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

template <class T>
Matrix<T> block(const Matrix<T>& a, std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols)
{
    require(row + nrows <= a.rows() && col + ncols <= a.cols(), "block out of range");
    Matrix<T> r(nrows, ncols, a.zero());
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) r(i, j) = a(row + i, col + j);
    return r;
}

template <class T>
void set_block(Matrix<T>& a, std::size_t row, std::size_t col, const Matrix<T>& b)
{
    require(row + b.rows() <= a.rows() && col + b.cols() <= a.cols(), "block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) a(row + i, col + j) = b(i, j);
}

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
    set_block(r, 0, 0, a);
    set_block(r, a.rows(), a.cols(), b);
    return r;
}

// Kronecker product; row index of a ⊗ b is i_a * rows(b) + i_b.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == a.zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

template <class T>
T trace(const Matrix<T>& a)
{
    T s = a.zero();
    for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) s = s + a(i, i);
    return s;
}

// Reduced row echelon form over a field; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const T& zero = a.zero();
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == zero) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        const T inv = RingTraits<T>::one(zero) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == zero) continue;
            const T f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!(a(r, j) == zero)) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a)
{
    return row_reduce(a).size();
}

// Basis of {v : a v = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a)
{
    const auto pivots = row_reduce(a);
    const T& zero = a.zero();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(a.cols(), zero);
        v[free] = RingTraits<T>::one(zero);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solution of a x = b for square invertible a, none if a is singular.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b)
{
    require(a.is_square() && a.rows() == b.rows(), "solve shape mismatch");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, n + b.cols(), a.zero());
    set_block(aug, 0, 0, a);
    set_block(aug, 0, n, b);
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    return block(aug, 0, n, n, b.cols());
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a)
{
    return solve(a, Matrix<T>::identity(a.rows(), a.zero()));
}

} // namespace charclass
