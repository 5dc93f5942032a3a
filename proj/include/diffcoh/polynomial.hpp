/**
 * Dense univariate polynomials over a finite coefficient field.
 *
 * The coefficient field F is any type with
 *   int zero(), one(), add(a,b), sub(a,b), mul(a,b), inv(a), neg(a)
 * and `order()` returning its size.  Polynomials are little-endian vectors
 * of coefficient codes with no trailing zeros.
 */
#ifndef DIFFCOH_POLYNOMIAL_HPP
#define DIFFCOH_POLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace diffcoh
{

using Poly = std::vector<int>;

/// Z/p with plain modular arithmetic.
struct PrimeField
{
    int p;
    explicit PrimeField(int prime) : p(prime) {}
    int zero() const { return 0; }
    int one() const { return 1; }
    int add(int a, int b) const { return (a + b) % p; }
    int sub(int a, int b) const { return (a - b + p) % p; }
    int neg(int a) const { return (p - a) % p; }
    int mul(int a, int b) const { return static_cast<int>((static_cast<long long>(a) * b) % p); }
    int inv(int a) const
    {
        if (a == 0)
            throw InvalidInput("PrimeField: inverse of zero");
        long long r = 1, b = a, e = p - 2;
        while (e > 0)
        {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<int>(r);
    }
    std::uint64_t order() const { return static_cast<std::uint64_t>(p); }
};

namespace poly
{

inline void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

template <class F>
Poly add(const F& K, const Poly& a, const Poly& b)
{
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = K.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

template <class F>
Poly sub(const F& K, const Poly& a, const Poly& b)
{
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = K.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

template <class F>
Poly mul(const F& K, const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0)
                    c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
    trim(c);
    return c;
}

/// Remainder of a modulo a nonzero f.
template <class F>
Poly mod(const F& K, Poly a, const Poly& f)
{
    if (f.empty())
        throw InvalidInput("poly::mod: division by zero polynomial");
    const int inv_lead = K.inv(f.back());
    const std::size_t df = f.size() - 1;
    trim(a);
    while (a.size() > df)
    {
        const int c = K.mul(a.back(), inv_lead);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = K.sub(a[shift + i], K.mul(c, f[i]));
        trim(a);
    }
    return a;
}

template <class F>
Poly mulmod(const F& K, const Poly& a, const Poly& b, const Poly& f)
{
    return mod(K, mul(K, a, b), f);
}

template <class F>
Poly powmod(const F& K, Poly a, std::uint64_t e, const Poly& f)
{
    Poly r{K.one()};
    r = mod(K, r, f);
    a = mod(K, a, f);
    while (e > 0)
    {
        if (e & 1)
            r = mulmod(K, r, a, f);
        e >>= 1;
        if (e)
            a = mulmod(K, a, a, f);
    }
    return r;
}

template <class F>
Poly gcd(const F& K, Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty())
    {
        Poly r = mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty())
    {
        const int il = K.inv(a.back());
        for (auto& c : a)
            c = K.mul(c, il);
    }
    return a;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
        {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

/// x^(Q^k) mod f where Q = |K|.
template <class F>
Poly frobenius_power_of_x(const F& K, const Poly& f, std::uint64_t k)
{
    Poly x = mod(K, Poly{K.zero(), K.one()}, f);
    for (std::uint64_t i = 0; i < k; ++i)
        x = powmod(K, x, K.order(), f);
    return x;
}

/// Rabin's irreducibility test for a polynomial of degree n >= 1.
template <class F>
bool is_irreducible(const F& K, const Poly& f)
{
    const int n = degree(f);
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    const Poly x = Poly{K.zero(), K.one()};
    if (sub(K, frobenius_power_of_x(K, f, static_cast<std::uint64_t>(n)), mod(K, x, f)).size() != 0)
        return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(n)))
    {
        Poly h = sub(K, frobenius_power_of_x(K, f, static_cast<std::uint64_t>(n) / r), x);
        if (degree(gcd(K, h, f)) != 0)
            return false;
    }
    return true;
}

/// Least monic irreducible polynomial of degree n, ordering lower coefficients as base-|K| digits.
template <class F>
Poly least_irreducible(const F& K, int n)
{
    const std::uint64_t Q = K.order();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= Q;
    for (std::uint64_t code = 0; code < total; ++code)
    {
        Poly f(static_cast<std::size_t>(n) + 1, 0);
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i)
        {
            f[static_cast<std::size_t>(i)] = static_cast<int>(c % Q);
            c /= Q;
        }
        f[static_cast<std::size_t>(n)] = K.one();
        if (is_irreducible(K, f))
            return f;
    }
    throw CheckFailed("least_irreducible: none found");
}

} // namespace poly
} // namespace diffcoh

#endif // DIFFCOH_POLYNOMIAL_HPP
