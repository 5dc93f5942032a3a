/**
 * Smith normal form with full change-of-basis witnesses, plus the integer
 * linear-system helpers built on top of it.
 */
#ifndef DIFFCOH_SMITH_HPP
#define DIFFCOH_SMITH_HPP

#include <optional>

#include "int_matrix.hpp"

namespace diffcoh
{

/// U * M * V = S, with Uinv, Vinv the exact inverses of U, V.
struct SmithForm
{
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    IntMatrix Uinv;
    IntMatrix Vinv;
    std::size_t rank = 0;

    /// Nonzero diagonal entries d1 | d2 | ... | d_rank, all positive.
    IntVector diagonal() const
    {
        IntVector d(rank);
        for (std::size_t i = 0; i < rank; ++i)
            d[i] = S(i, i);
        return d;
    }
};

namespace detail
{

struct SmithState
{
    SmithForm f;

    void swap_rows(std::size_t i, std::size_t j)
    {
        f.S.swap_rows(i, j);
        f.U.swap_rows(i, j);
        f.Uinv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        f.S.swap_cols(i, j);
        f.V.swap_cols(i, j);
        f.Vinv.swap_rows(i, j);
    }
    // row_i += q row_j
    void add_row(std::size_t i, std::size_t j, const Integer& q)
    {
        f.S.add_row(i, j, q);
        f.U.add_row(i, j, q);
        f.Uinv.add_col(j, i, -q);
    }
    // col_i += q col_j
    void add_col(std::size_t i, std::size_t j, const Integer& q)
    {
        f.S.add_col(i, j, q);
        f.V.add_col(i, j, q);
        f.Vinv.add_row(j, i, -q);
    }
    void negate_row(std::size_t i)
    {
        f.S.negate_row(i);
        f.U.negate_row(i);
        f.Uinv.negate_col(i);
    }
};

} // namespace detail

/**
 * Deterministic Smith normal form.  The pivot at each stage is the entry of
 * least absolute value in the remaining block, ties broken by (row, col).
 */
inline SmithForm smith_normal_form(const IntMatrix& M)
{
    const std::size_t m = M.rows(), n = M.cols();
    detail::SmithState st;
    st.f.S = M;
    st.f.U = IntMatrix::identity(m);
    st.f.Uinv = IntMatrix::identity(m);
    st.f.V = IntMatrix::identity(n);
    st.f.Vinv = IntMatrix::identity(n);
    IntMatrix& S = st.f.S;

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t)
    {
        // least |entry| in the trailing block
        bool found = false;
        std::size_t pi = 0, pj = 0;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (S(i, j) != 0 && (!found || abs(S(i, j)) < best))
                {
                    found = true;
                    best = abs(S(i, j));
                    pi = i;
                    pj = j;
                }
        if (!found)
            break;
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);

        for (;;)
        {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (S(i, t) != 0)
                {
                    Integer q = S(i, t) / S(t, t);
                    st.add_row(i, t, -q);
                    if (S(i, t) != 0)
                        clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (S(t, j) != 0)
                {
                    Integer q = S(t, j) / S(t, t);
                    st.add_col(j, t, -q);
                    if (S(t, j) != 0)
                        clean = false;
                }
            if (!clean)
            {
                // a remainder is now smaller than the pivot; bring the least one in
                std::size_t bi = t, bj = t;
                Integer b = abs(S(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (S(i, t) != 0 && abs(S(i, t)) < b)
                    {
                        b = abs(S(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (S(t, j) != 0 && abs(S(t, j)) < b)
                    {
                        b = abs(S(t, j));
                        bi = t;
                        bj = j;
                    }
                st.swap_rows(t, bi);
                st.swap_cols(t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (S(i, j) % S(t, t) != 0)
                    {
                        st.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (S(t, t) < 0)
            st.negate_row(t);
    }
    st.f.rank = t;
    return st.f;
}

/// Basis of the integer kernel {x : M x = 0} as columns.
inline IntMatrix integer_kernel(const IntMatrix& M)
{
    SmithForm f = smith_normal_form(M);
    std::vector<std::size_t> idx;
    for (std::size_t j = f.rank; j < M.cols(); ++j)
        idx.push_back(j);
    return f.V.select_cols(idx);
}

/**
 * Some integer solution x of M x = b, or nothing.  Free parameters in the
 * Smith coordinates are set to zero, so the answer is deterministic.
 */
inline std::optional<IntVector> solve_integer(const SmithForm& f, const IntVector& b)
{
    IntVector c = f.U * b;
    IntVector y(f.V.rows());
    for (std::size_t i = 0; i < c.size(); ++i)
    {
        if (i < f.rank)
        {
            if (c[i] % f.S(i, i) != 0)
                return std::nullopt;
            y[i] = c[i] / f.S(i, i);
        }
        else if (c[i] != 0)
            return std::nullopt;
    }
    return f.V * y;
}

inline std::optional<IntVector> solve_integer(const IntMatrix& M, const IntVector& b)
{
    return solve_integer(smith_normal_form(M), b);
}

/// True when |det| = 1.
inline bool is_unimodular(const IntMatrix& M)
{
    return M.rows() == M.cols() && abs(determinant(M)) == 1;
}

} // namespace diffcoh

#endif // DIFFCOH_SMITH_HPP
