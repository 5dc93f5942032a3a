/**
 * Finite fields F_{p^m} with discrete-log tables, Frobenius powers, and
 * extensions F_{q^e} built as towers over a tabled base field.
 *
 * An element of F_{p^m} is coded by the integer Σ c_i p^i, where Σ c_i x^i is
 * its representative modulo the defining polynomial.  Code 0 is zero and
 * code 1 is one.
 */
#ifndef DIFFCOH_FINITE_FIELD_HPP
#define DIFFCOH_FINITE_FIELD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "int_matrix.hpp"
#include "polynomial.hpp"

namespace diffcoh
{

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i)
        r *= b;
    return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b)
    {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

class FiniteField
{
public:
    static constexpr std::uint64_t table_limit = 1u << 16;

    FiniteField() = default;

    FiniteField(int p, int m, std::optional<Poly> modulus = std::nullopt) : p_(p), m_(m)
    {
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw InvalidInput("FiniteField: p must be prime");
        if (m < 1)
            throw InvalidInput("FiniteField: m must be >= 1");
        q_ = ipow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
        if (q_ > table_limit)
            throw BoundExceeded("FiniteField: field too large for log tables", static_cast<double>(q_));
        PrimeField Fp(p);
        if (modulus)
        {
            modulus_ = *modulus;
            poly::trim(modulus_);
            if (poly::degree(modulus_) != m || modulus_.back() != 1)
                throw InvalidInput("FiniteField: modulus must be monic of degree m");
            for (int c : modulus_)
                if (c < 0 || c >= p)
                    throw InvalidInput("FiniteField: modulus coefficients must lie in [0, p)");
            if (!poly::is_irreducible(Fp, modulus_))
                throw InvalidInput("FiniteField: modulus is not irreducible");
        }
        else
            modulus_ = poly::least_irreducible(Fp, m);
        build_tables();
    }

    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return q_; }
    const Poly& modulus() const noexcept { return modulus_; }
    int generator() const noexcept { return exp_[exp_.size() > 1 ? 1 : 0]; }

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const
    {
        if (m_ == 1)
            return (a + b) % p_;
        int r = 0, place = 1;
        for (int i = 0; i < m_; ++i)
        {
            r += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return r;
    }
    int neg(int a) const
    {
        if (m_ == 1)
            return (p_ - a) % p_;
        int r = 0, place = 1;
        for (int i = 0; i < m_; ++i)
        {
            r += ((p_ - a % p_) % p_) * place;
            a /= p_;
            place *= p_;
        }
        return r;
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const
    {
        if (a == 0)
            throw InvalidInput("FiniteField: inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, std::uint64_t e) const
    {
        if (a == 0)
            return e == 0 ? 1 : 0;
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
    }
    /// Power of a nonzero element with an integer (possibly negative) exponent.
    int pow_signed(int a, long long e) const
    {
        long long k = e % static_cast<long long>(q_ - 1);
        if (k < 0)
            k += static_cast<long long>(q_ - 1);
        return pow(a, static_cast<std::uint64_t>(k));
    }

    /// Discrete log base the generator; a != 0.
    std::uint64_t dlog(int a) const
    {
        if (a == 0)
            throw InvalidInput("FiniteField: log of zero");
        return static_cast<std::uint64_t>(log_[a]);
    }
    int exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

    /// x -> x^(p^r)
    int frob(int a, std::uint64_t r) const
    {
        return pow(a, ipow(static_cast<std::uint64_t>(p_), r % static_cast<std::uint64_t>(m_)));
    }

    /// Coordinates over F_p in the basis 1, x, ..., x^(m-1).
    std::vector<int> digits(int a) const
    {
        std::vector<int> d(m_);
        for (int i = 0; i < m_; ++i)
        {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }
    int from_digits(const std::vector<int>& d) const
    {
        int r = 0, place = 1;
        for (int i = 0; i < m_; ++i)
        {
            r += (((d[i] % p_) + p_) % p_) * place;
            place *= p_;
        }
        return r;
    }

    /// Integer embedding of F_p into the field.
    int from_int(long long v) const { return static_cast<int>(((v % p_) + p_) % p_); }

    /// The F_p-matrix of an additive map on the field.
    template <class Map>
    IntMatrix fp_matrix(Map L) const
    {
        IntMatrix M(m_, m_);
        int basis = 1;
        for (int j = 0; j < m_; ++j)
        {
            auto d = digits(L(basis));
            for (int i = 0; i < m_; ++i)
                M(i, j) = d[i];
            basis *= p_;
        }
        return M;
    }

    std::string element_string(int a) const
    {
        if (m_ == 1)
            return std::to_string(a);
        auto d = digits(a);
        std::string s;
        for (int i = m_ - 1; i >= 0; --i)
        {
            if (d[i] == 0)
                continue;
            if (!s.empty())
                s += "+";
            if (i == 0 || d[i] != 1)
                s += std::to_string(d[i]);
            if (i >= 1)
                s += i == 1 ? "x" : "x^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    int slow_mul(int a, int b) const
    {
        PrimeField Fp(p_);
        Poly pa, pb;
        for (int v : digits(a))
            pa.push_back(v);
        for (int v : digits(b))
            pb.push_back(v);
        poly::trim(pa);
        poly::trim(pb);
        Poly c = poly::mulmod(Fp, pa, pb, modulus_);
        c.resize(m_, 0);
        return from_digits(c);
    }

    void build_tables()
    {
        exp_.assign(q_ - 1 == 0 ? 1 : q_ - 1, 1);
        log_.assign(q_, 0);
        const auto factors = poly::prime_factors(q_ - 1);
        for (int g = 1; g < static_cast<int>(q_); ++g)
        {
            // order of g is q-1 iff g^((q-1)/l) != 1 for every prime l | q-1
            bool primitive = true;
            for (auto l : factors)
            {
                std::uint64_t e = (q_ - 1) / l;
                int r = 1, b = g;
                while (e)
                {
                    if (e & 1)
                        r = slow_mul(r, b);
                    b = slow_mul(b, b);
                    e >>= 1;
                }
                if (r == 1)
                {
                    primitive = false;
                    break;
                }
            }
            if (!primitive)
                continue;
            int x = 1;
            for (std::uint64_t k = 0; k < q_ - 1; ++k)
            {
                exp_[k] = x;
                log_[x] = static_cast<int>(k);
                x = slow_mul(x, g);
            }
            if (q_ == 2)
                exp_[0] = 1;
            return;
        }
        throw CheckFailed("FiniteField: no primitive element found");
    }

    int p_ = 2;
    int m_ = 1;
    std::uint64_t q_ = 2;
    Poly modulus_;
    std::vector<int> exp_;
    std::vector<int> log_;
};

/// F_{q^e} = F_q[y]/(h) with h the least monic irreducible of degree e over F_q.
class ExtensionField
{
public:
    using Elem = std::vector<int>; // e coefficients in F_q, little-endian

    ExtensionField(const FiniteField& base, int e) : base_(base), e_(e)
    {
        if (e < 1)
            throw InvalidInput("ExtensionField: degree must be >= 1");
        modulus_ = poly::least_irreducible(base_, e);
        order_ = ipow(base_.order(), static_cast<std::uint64_t>(e));
    }

    const FiniteField& base() const noexcept { return base_; }
    int degree() const noexcept { return e_; }
    const Poly& modulus() const noexcept { return modulus_; }
    std::uint64_t order() const noexcept { return order_; }

    Elem embed(int a) const
    {
        Elem x(e_, 0);
        x[0] = a;
        return x;
    }
    Elem one() const { return embed(1); }

    Elem normalize(Poly f) const
    {
        f = poly::mod(base_, f, modulus_);
        f.resize(e_, 0);
        return f;
    }
    Elem mul(const Elem& a, const Elem& b) const
    {
        Poly pa = a, pb = b;
        poly::trim(pa);
        poly::trim(pb);
        return normalize(poly::mul(base_, pa, pb));
    }
    Elem pow(Elem a, std::uint64_t k) const
    {
        Elem r = one();
        while (k)
        {
            if (k & 1)
                r = mul(r, a);
            k >>= 1;
            if (k)
                a = mul(a, a);
        }
        return r;
    }
    bool is_zero(const Elem& a) const
    {
        return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
    }

    /// Element with the given base-q code.
    Elem from_code(std::uint64_t code) const
    {
        Elem x(e_, 0);
        for (int i = 0; i < e_; ++i)
        {
            x[i] = static_cast<int>(code % base_.order());
            code /= base_.order();
        }
        return x;
    }

    /// Least (by code) element of multiplicative order q^e - 1.
    Elem primitive_element() const
    {
        const std::uint64_t N = order_ - 1;
        const auto fac = poly::prime_factors(N);
        for (std::uint64_t code = 1; code < order_; ++code)
        {
            Elem g = from_code(code);
            bool ok = true;
            for (auto l : fac)
                if (pow(g, N / l) == one())
                {
                    ok = false;
                    break;
                }
            if (ok)
                return g;
        }
        throw CheckFailed("ExtensionField: no primitive element");
    }

    /// Discrete log of a in base g (g primitive), by Pohlig-Hellman with baby-step giant-step per prime.
    std::uint64_t dlog(const Elem& g, const Elem& a) const
    {
        const std::uint64_t N = order_ - 1;
        std::uint64_t x = 0, modulus = 1;
        for (auto l : poly::prime_factors(N))
        {
            std::uint64_t le = 1;
            int ex = 0;
            while ((N / le) % l == 0)
            {
                le *= l;
                ++ex;
            }
            // solve x_l = log mod l^ex digit by digit
            const Elem gamma = pow(g, N / l); // order l
            std::uint64_t xl = 0, lk = 1;
            for (int k = 0; k < ex; ++k)
            {
                // h = (a · g^-xl)^(N / l^(k+1))
                Elem ginv_xl = pow(g, (N - (xl % N)) % N);
                Elem h = pow(mul(a, ginv_xl), N / (lk * l));
                std::uint64_t d = bsgs(gamma, h, l);
                xl += d * lk;
                lk *= l;
            }
            x = crt(x, modulus, xl, le);
            modulus *= le;
        }
        return x % N;
    }

private:
    std::uint64_t bsgs(const Elem& gamma, const Elem& h, std::uint64_t ord) const
    {
        std::uint64_t s = 1;
        while (s * s < ord)
            ++s;
        std::map<Elem, std::uint64_t> baby;
        Elem cur = one();
        for (std::uint64_t j = 0; j < s; ++j)
        {
            baby.emplace(cur, j);
            cur = mul(cur, gamma);
        }
        const Elem giant = pow(gamma, (ord - (s % ord)) % ord); // gamma^-s
        Elem y = h;
        for (std::uint64_t i = 0; i <= s; ++i)
        {
            auto it = baby.find(y);
            if (it != baby.end())
                return (i * s + it->second) % ord;
            y = mul(y, giant);
        }
        throw CheckFailed("bsgs: element not in subgroup");
    }

    static std::uint64_t crt(std::uint64_t a, std::uint64_t m, std::uint64_t b, std::uint64_t n)
    {
        // x ≡ a mod m, x ≡ b mod n, gcd(m, n) = 1
        Integer x, y;
        extended_gcd(Integer(m), Integer(n), x, y);
        Integer M = Integer(m) * n;
        Integer r = (Integer(a) + (Integer(b) - a) * x % n * m) % M;
        if (r < 0)
            r += M;
        return r.convert_to<std::uint64_t>();
    }

    FiniteField base_;
    int e_;
    Poly modulus_;
    std::uint64_t order_;
};

} // namespace diffcoh

#endif // DIFFCOH_FINITE_FIELD_HPP
