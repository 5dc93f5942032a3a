/**
 * Isomorphism type of a finite abelian group given only by an element count
 * and a multiplication, read off from the number of solutions of x^(l^k) = 1
 * for every prime l dividing the order.
 */
#ifndef DIFFCOH_FINITE_ABELIAN_HPP
#define DIFFCOH_FINITE_ABELIAN_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "abelian_group.hpp"
#include "polynomial.hpp"

namespace diffcoh
{

/**
 * Elements are 0..n-1, `op` is the group law and `e` the identity.
 * Checks commutativity, identity and inverses; throws InvalidInput otherwise.
 */
inline FgAbGroup abelian_group_from_law(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op,
                                        std::size_t e)
{
    if (n == 0)
        throw InvalidInput("abelian_group_from_law: empty group");
    for (std::size_t x = 0; x < n; ++x)
    {
        if (op(e, x) != x)
            throw InvalidInput("abelian_group_from_law: identity law fails");
        bool has_inv = false;
        for (std::size_t y = 0; y < n; ++y)
        {
            if (op(x, y) != op(y, x))
                throw InvalidInput("abelian_group_from_law: not commutative");
            if (op(x, y) == e)
                has_inv = true;
        }
        if (!has_inv)
            throw InvalidInput("abelian_group_from_law: element without inverse");
    }
    auto power = [&](std::size_t x, std::uint64_t k) {
        std::size_t r = e;
        for (std::uint64_t i = 0; i < k; ++i)
            r = op(r, x);
        return r;
    };
    // exponent multiset per prime: count_k = #{x : x^(l^k) = 1} = l^(Σ min(k, a_i))
    std::vector<std::vector<std::uint64_t>> parts; // per prime: exponents a_i descending
    std::vector<std::uint64_t> primes = poly::prime_factors(n);
    for (auto l : primes)
    {
        std::vector<std::uint64_t> logcount{0};
        std::uint64_t k = 0;
        std::vector<std::size_t> cur(n);
        for (std::size_t x = 0; x < n; ++x)
            cur[x] = x;
        for (;;)
        {
            ++k;
            std::size_t c = 0;
            for (std::size_t x = 0; x < n; ++x)
            {
                cur[x] = power(cur[x], l); // x^(l^k)
                if (cur[x] == e)
                    ++c;
            }
            std::uint64_t lg = 0, t = c;
            while (t % l == 0 && t > 1)
            {
                t /= l;
                ++lg;
            }
            if (t != 1)
                throw InvalidInput("abelian_group_from_law: inconsistent l-torsion count");
            logcount.push_back(lg);
            if (logcount[k] == logcount[k - 1])
                break;
        }
        // number of a_i >= k is logcount[k] - logcount[k-1]
        std::vector<std::uint64_t> ge;
        for (std::size_t j = 1; j < logcount.size(); ++j)
            ge.push_back(logcount[j] - logcount[j - 1]);
        std::vector<std::uint64_t> exps;
        const std::uint64_t count = ge.empty() ? 0 : ge[0];
        for (std::uint64_t i = 0; i < count; ++i)
        {
            std::uint64_t a = 0;
            for (auto g : ge)
                if (g > i)
                    ++a;
            exps.push_back(a);
        }
        std::sort(exps.begin(), exps.end(), std::greater<>());
        parts.push_back(exps);
    }
    std::size_t width = 0;
    for (const auto& p : parts)
        width = std::max(width, p.size());
    std::vector<Integer> inv(width, 1); // inv[0] is the largest factor
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (std::size_t i = 0; i < parts[pi].size(); ++i)
            for (std::uint64_t j = 0; j < parts[pi][i]; ++j)
                inv[i] *= primes[pi];
    std::reverse(inv.begin(), inv.end());
    IntVector torsion;
    for (const auto& d : inv)
        if (d > 1)
            torsion.push_back(d);
    FgAbGroup G(0, torsion);
    if (G.order() != n)
        throw InvalidInput("abelian_group_from_law: order mismatch, the law is not a group law");
    return G;
}

} // namespace diffcoh

#endif // DIFFCOH_FINITE_ABELIAN_HPP
