/**
 * Dense matrices over the arbitrary-precision integers.
 *
 * IntMatrix is the carrier for every differential, relation matrix and
 * change-of-basis witness in the library.  Entries are stored row-major.
 */
#ifndef DIFFCOH_INT_MATRIX_HPP
#define DIFFCOH_INT_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace diffcoh
{

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Non-negative remainder of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r = a % m;
    if (r < 0)
        r += m;
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer x = abs(a), y = abs(b);
    while (y != 0)
    {
        Integer t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return abs(a / gcd(a, b) * b);
}

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
inline Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y)
{
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0)
    {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0)
    {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

class IntMatrix
{
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::size_t rows, std::size_t cols, IntVector entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw InvalidInput("IntMatrix: entries length does not match rows*cols");
    }

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows)
        {
            if (row.size() != cols_)
                throw InvalidInput("IntMatrix: ragged initializer");
            for (long long v : row)
                data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntMatrix diagonal(const IntVector& d)
    {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    static IntMatrix column(const IntVector& v)
    {
        return IntMatrix(v.size(), 1, v);
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const IntVector& entries() const noexcept { return data_; }

    IntVector col(std::size_t j) const
    {
        IntVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    IntVector row(std::size_t i) const
    {
        return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void set_col(std::size_t j, const IntVector& v)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = v[i];
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
    }

    IntMatrix transpose() const
    {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns with the given indices, in order.
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const
    {
        IntMatrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < idx.size(); ++k)
                m(i, k) = (*this)(i, idx[k]);
        return m;
    }

    IntMatrix select_rows(const std::vector<std::size_t>& idx) const
    {
        IntMatrix m(idx.size(), cols_);
        for (std::size_t k = 0; k < idx.size(); ++k)
            for (std::size_t j = 0; j < cols_; ++j)
                m(k, j) = (*this)(idx[k], j);
        return m;
    }

    /// Rectangular block [r0, r0+nr) x [c0, c0+nc).
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        IntMatrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
    {
        check_same_shape(a, b);
        IntMatrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k)
            c.data_[k] += b.data_[k];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
    {
        check_same_shape(a, b);
        IntMatrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k)
            c.data_[k] -= b.data_[k];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a)
    {
        IntMatrix c = a;
        for (auto& x : c.data_)
            x = -x;
        return c;
    }

    friend IntMatrix operator*(const Integer& s, const IntMatrix& a)
    {
        IntMatrix c = a;
        for (auto& x : c.data_)
            x *= s;
        return c;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw InvalidInput("IntMatrix: incompatible shapes for product");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
            {
                const Integer& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend IntVector operator*(const IntMatrix& a, const IntVector& v)
    {
        if (a.cols_ != v.size())
            throw InvalidInput("IntMatrix: incompatible shapes for matrix-vector product");
        IntVector r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (v[k] != 0 && a(i, k) != 0)
                    r[i] += a(i, k) * v[k];
        return r;
    }

    /// [a | b]
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.rows_ != b.rows_)
            throw InvalidInput("IntMatrix::hstack: row mismatch");
        IntMatrix c(a.rows_, a.cols_ + b.cols_);
        c.set_block(0, 0, a);
        c.set_block(0, a.cols_, b);
        return c;
    }

    /// [a ; b]
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.cols_ != b.cols_)
            throw InvalidInput("IntMatrix::vstack: column mismatch");
        IntMatrix c(a.rows_ + b.rows_, a.cols_);
        c.set_block(0, 0, a);
        c.set_block(a.rows_, 0, b);
        return c;
    }

    static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b)
    {
        IntMatrix c(a.rows_ + b.rows_, a.cols_ + b.cols_);
        c.set_block(0, 0, a);
        c.set_block(a.rows_, a.cols_, b);
        return c;
    }

    /// Kronecker product a (x) b.
    static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
    {
        IntMatrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a(i, j) != 0)
                    for (std::size_t k = 0; k < b.rows_; ++k)
                        for (std::size_t l = 0; l < b.cols_; ++l)
                            c(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        return c;
    }

    // Elementary operations used by the Smith normal form.
    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, i), (*this)(r, j));
    }

    /// row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& q)
    {
        if (q == 0)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(j, c) != 0)
                (*this)(i, c) += q * (*this)(j, c);
    }

    /// col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Integer& q)
    {
        if (q == 0)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*this)(r, j) != 0)
                (*this)(r, i) += q * (*this)(r, j);
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(i, c) = -(*this)(i, c);
    }

    void negate_col(std::size_t j)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, j) = -(*this)(r, j);
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
    {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i)
        {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    static void check_same_shape(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw InvalidInput("IntMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVector data_;
};

/// Exact determinant of a square matrix by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix a)
{
    if (a.rows() != a.cols())
        throw InvalidInput("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (a(k, k) == 0)
        {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

} // namespace diffcoh

#endif // DIFFCOH_INT_MATRIX_HPP
