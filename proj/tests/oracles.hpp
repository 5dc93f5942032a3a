// Independent brute-force helpers shared by the unit tests.  Nothing here
// calls the Smith normal form; the point is to check it from outside.
#ifndef DIFFCOH_TEST_ORACLES_HPP
#define DIFFCOH_TEST_ORACLES_HPP

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <diffcoh/abelian_group.hpp>

namespace oracle
{

using diffcoh::Integer;
using diffcoh::IntMatrix;
using diffcoh::IntVector;

/// gcd of all k×k minors, for k = 1..min(m, n); the product d1⋯dk of the Smith diagonal.
inline std::vector<Integer> determinantal_divisors(const IntMatrix& M)
{
    const std::size_t m = M.rows(), n = M.cols();
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= std::min(m, n); ++k)
    {
        Integer g = 0;
        std::vector<bool> rs(m, false), cs(n, false);
        std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
        do
        {
            std::vector<std::size_t> ri;
            for (std::size_t i = 0; i < m; ++i)
                if (rs[i])
                    ri.push_back(i);
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
            do
            {
                std::vector<std::size_t> ci;
                for (std::size_t j = 0; j < n; ++j)
                    if (cs[j])
                        ci.push_back(j);
                g = diffcoh::gcd(g, diffcoh::determinant(M.select_rows(ri).select_cols(ci)));
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
        out.push_back(g);
    }
    return out;
}

/// Expected Smith diagonal (with zeros) from determinantal divisors.
inline std::vector<Integer> expected_smith_diagonal(const IntMatrix& M)
{
    auto D = determinantal_divisors(M);
    std::vector<Integer> d;
    Integer prev = 1;
    for (const auto& x : D)
    {
        if (x == 0)
            d.push_back(0);
        else
        {
            d.push_back(x / prev);
            prev = x;
        }
    }
    return d;
}

/// #{x : k x = 0} for each k = 1..K, computed from a list of elements and an addition.
template <class Elem, class Add, class Zero>
std::vector<std::size_t> kill_profile(const std::vector<Elem>& elems, Add add, Zero zero, std::size_t K)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= K; ++k)
    {
        std::size_t c = 0;
        for (const auto& x : elems)
        {
            Elem acc = zero();
            for (std::size_t i = 0; i < k; ++i)
                acc = add(acc, x);
            if (acc == zero())
                ++c;
        }
        out.push_back(c);
    }
    return out;
}

/// The same profile for a canonical group, via ∏ gcd(k, d_i).
inline std::vector<std::size_t> kill_profile(const diffcoh::FgAbGroup& G, std::size_t K)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= K; ++k)
    {
        Integer c = 1;
        for (const auto& d : G.torsion())
            c *= diffcoh::gcd(Integer(k), d);
        out.push_back(c.convert_to<std::size_t>());
    }
    return out;
}

/// Finite abelian group structure of a set of residues with addition mod n, as a kill profile.
inline std::vector<std::size_t> subgroup_profile_mod(const std::set<long long>& elems, long long n, std::size_t K)
{
    std::vector<long long> v(elems.begin(), elems.end());
    return kill_profile(
        v, [n](long long a, long long b) { return (a + b) % n; }, [] { return 0LL; }, K);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            M(i, j) = d(rng);
    return M;
}

/// Product of random elementary matrices: unimodular by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 8)
{
    IntMatrix U = IntMatrix::identity(n);
    if (n < 2)
        return U;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> q(-3, 3);
    for (int s = 0; s < steps; ++s)
    {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        U.add_row(i, j, q(rng));
    }
    return U;
}

} // namespace oracle

#endif
