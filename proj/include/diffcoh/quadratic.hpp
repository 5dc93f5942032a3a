/**
 * Maximal orders of quadratic fields Q(√d) with s = conjugation: units, ideals
 * in two-element Hermite form, class groups by prime ideals below the
 * Minkowski bound, and the difference Picard group of pairs (I, λ) with
 * λ·s(I) = I.
 *
 * Elements of the order are x + yω with ω = √d, or (1 + √d)/2 when d ≡ 1 mod 4,
 * so that ω² = Tω - Nm.
 */
#ifndef DIFFCOH_QUADRATIC_HPP
#define DIFFCOH_QUADRATIC_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "finite_abelian.hpp"
#include "sigma_module.hpp"

namespace diffcoh
{

/// x + yω over a positive denominator.
struct QuadElem
{
    Integer x = 0, y = 0, den = 1;

    bool is_integral() const { return den == 1; }
    friend bool operator==(const QuadElem& a, const QuadElem& b) { return a.x == b.x && a.y == b.y && a.den == b.den; }
};

/// Lattice aZ + (b + cω)Z, stored as (a, b, c) with 0 <= b < a, c > 0.
struct Ideal
{
    Integer a = 1, b = 0, c = 1;

    Integer norm() const { return a * c; }
    friend bool operator==(const Ideal& p, const Ideal& q) { return p.a == q.a && p.b == q.b && p.c == q.c; }
    std::string to_string() const
    {
        return "(" + a.str() + ", " + b.str() + (c == 1 ? std::string() : " + " + c.str() + "w") + (c == 1 ? " + w)" : ")");
    }
};

class QuadraticOrder
{
public:
    static constexpr double default_disc_bound = 1e6;

    explicit QuadraticOrder(long long d) : d_(d)
    {
        if (d == 0 || d == 1)
            throw InvalidInput("QuadraticOrder: d must differ from 0 and 1");
        for (long long p = 2; p * p <= std::llabs(d); ++p)
            if (d % (p * p) == 0)
                throw InvalidInput("QuadraticOrder: d must be squarefree");
        if (mod_floor(Integer(d), 4) == 1)
        {
            T_ = 1;
            Nm_ = (1 - Integer(d)) / 4;
            disc_ = d;
        }
        else
        {
            T_ = 0;
            Nm_ = -Integer(d);
            disc_ = 4 * Integer(d);
        }
    }

    long long d() const noexcept { return d_; }
    const Integer& disc() const noexcept { return disc_; }
    const Integer& trace_w() const noexcept { return T_; }
    const Integer& norm_w() const noexcept { return Nm_; }

    // ---- elements

    QuadElem normalize(QuadElem e) const
    {
        if (e.den == 0)
            throw InvalidInput("QuadraticOrder: zero denominator");
        if (e.den < 0)
        {
            e.x = -e.x;
            e.y = -e.y;
            e.den = -e.den;
        }
        Integer g = gcd(gcd(e.x, e.y), e.den);
        if (g > 1)
        {
            e.x /= g;
            e.y /= g;
            e.den /= g;
        }
        return e;
    }
    QuadElem integer(const Integer& n) const { return {n, 0, 1}; }
    QuadElem mul(const QuadElem& p, const QuadElem& q) const
    {
        // (x + yω)(u + vω) = xu - yv·Nm + (xv + yu + yv·T)ω
        return normalize({p.x * q.x - p.y * q.y * Nm_, p.x * q.y + p.y * q.x + p.y * q.y * T_, p.den * q.den});
    }
    QuadElem conj(const QuadElem& p) const { return normalize({p.x + p.y * T_, -p.y, p.den}); }
    /// Norm as a rational numerator/denominator pair (den > 0).
    std::pair<Integer, Integer> norm(const QuadElem& p) const
    {
        const Integer n = p.x * p.x + p.x * p.y * T_ + p.y * p.y * Nm_;
        Integer den = p.den * p.den, g = gcd(n, den);
        return {n / g, den / g};
    }
    QuadElem inv(const QuadElem& p) const
    {
        auto [n, nd] = norm(p);
        if (n == 0)
            throw InvalidInput("QuadraticOrder: inverse of zero");
        QuadElem c = conj(p);
        return normalize({c.x * nd, c.y * nd, c.den * n});
    }
    QuadElem div(const QuadElem& p, const QuadElem& q) const { return mul(p, inv(q)); }
    bool is_unit(const QuadElem& p) const
    {
        if (!p.is_integral())
            return false;
        auto [n, nd] = norm(p);
        return nd == 1 && (n == 1 || n == -1);
    }
    double to_double(const QuadElem& p) const
    {
        const double w = (T_ == 1 ? (1.0 + std::sqrt(static_cast<double>(d_))) / 2.0 : std::sqrt(static_cast<double>(d_)));
        return (p.x.convert_to<double>() + p.y.convert_to<double>() * w) / p.den.convert_to<double>();
    }
    std::string to_string(const QuadElem& p) const
    {
        std::string s = p.x.str();
        if (p.y != 0)
            s += (p.y < 0 ? " - " : " + ") + (abs(p.y) == 1 ? std::string() : Integer(abs(p.y)).str()) + "w";
        if (p.den != 1)
            s = "(" + s + ")/" + p.den.str();
        return s;
    }

    // ---- ideals

    /// Hermite form of the Z-lattice spanned by the given integral elements and their ω-multiples.
    Ideal ideal(const std::vector<QuadElem>& gens) const
    {
        std::vector<std::pair<Integer, Integer>> v;
        for (const auto& g : gens)
        {
            if (!g.is_integral())
                throw InvalidInput("QuadraticOrder::ideal: generators must be integral");
            v.push_back({g.x, g.y});
            const QuadElem gw = mul(g, QuadElem{0, 1, 1});
            v.push_back({gw.x, gw.y});
        }
        return hermite(v);
    }
    Ideal unit_ideal() const { return Ideal{}; }
    Ideal principal(const QuadElem& g) const { return ideal({g}); }
    Ideal mul(const Ideal& I, const Ideal& J) const
    {
        const QuadElem i1{I.a, 0, 1}, i2{I.b, I.c, 1}, j1{J.a, 0, 1}, j2{J.b, J.c, 1};
        return ideal({mul(i1, j1), mul(i1, j2), mul(i2, j1), mul(i2, j2)});
    }
    Ideal conj(const Ideal& I) const { return ideal({QuadElem{I.a, 0, 1}, conj(QuadElem{I.b, I.c, 1})}); }
    bool contains(const Ideal& I, const QuadElem& e) const
    {
        if (!e.is_integral() || e.y % I.c != 0)
            return false;
        return (e.x - (e.y / I.c) * I.b) % I.a == 0;
    }
    Ideal scale(const Ideal& I, const Integer& n) const { return ideal({QuadElem{I.a * n, 0, 1}, QuadElem{I.b * n, I.c * n, 1}}); }

    /// A generator of I when I is principal.
    std::optional<QuadElem> principal_generator(const Ideal& I) const
    {
        const Integer n = I.norm();
        const Integer D = disc_;
        // 4·N(x + yω) = (2x + yT)² - D·y²; |y| is bounded by the norm form (d < 0) or the unit (d > 0)
        Integer Y;
        if (d_ < 0)
            Y = boost::multiprecision::sqrt(Integer(4 * n / -D)) + 1;
        else
        {
            const double eps = to_double(fundamental_unit());
            const double yb = (eps + 1.0) * std::sqrt(n.convert_to<double>()) / std::sqrt(D.convert_to<double>()) + 2.0;
            if (yb > 1e7)
                throw BoundExceeded("principal_generator: search range too large", yb);
            Y = Integer(static_cast<long long>(yb));
        }
        for (Integer y = 0; y <= Y; ++y)
            for (int sgn : {1, -1})
            {
                if (d_ < 0 && sgn < 0)
                    continue;
                const Integer rhs = 4 * n * sgn + D * y * y;
                if (rhs < 0)
                    continue;
                const Integer u = boost::multiprecision::sqrt(rhs);
                if (u * u != rhs)
                    continue;
                for (const Integer& uu : {u, Integer(-u)})
                    for (const Integer& yy : {y, Integer(-y)})
                    {
                        const Integer t = uu - yy * T_;
                        if (t % 2 != 0)
                            continue;
                        QuadElem e{t / 2, yy, 1};
                        if (contains(I, e))
                            return e;
                    }
            }
        return std::nullopt;
    }
    bool is_principal(const Ideal& I) const { return principal_generator(I).has_value(); }
    bool equivalent(const Ideal& I, const Ideal& J) const { return is_principal(mul(I, conj(J))); }

    /// Prime ideals above p (one per root of x² - Tx + Nm mod p, or (p) when inert).
    std::vector<Ideal> primes_above(const Integer& p) const
    {
        std::vector<Ideal> out;
        for (Integer r = 0; r < p; ++r)
            if (mod_floor(r * r - T_ * r + Nm_, p) == 0)
                out.push_back(ideal({QuadElem{p, 0, 1}, QuadElem{-r, 1, 1}}));
        if (out.empty())
            out.push_back(ideal({QuadElem{p, 0, 1}}));
        return out;
    }

    double minkowski_bound() const
    {
        const double D = std::abs(disc_.convert_to<double>());
        return d_ < 0 ? 2.0 / M_PI * std::sqrt(D) : 0.5 * std::sqrt(D);
    }

    // ---- units

    /// Fundamental unit ε > 1 for d > 0: least y > 0 with (2x + yT)² - D y² = ±4.
    QuadElem fundamental_unit() const
    {
        if (d_ < 0)
            throw InvalidInput("fundamental_unit: only for real quadratic fields");
        if (fund_)
            return *fund_;
        for (Integer y = 1; y < 10000000; ++y)
            for (int s : {-4, 4})
            {
                const Integer rhs = disc_ * y * y + s;
                const Integer u = boost::multiprecision::sqrt(rhs);
                if (u * u == rhs && (u - y * T_) % 2 == 0)
                {
                    fund_ = QuadElem{(u - y * T_) / 2, y, 1};
                    return *fund_;
                }
            }
        throw BoundExceeded("fundamental_unit: search exhausted", 1e7);
    }

private:
    Ideal hermite(std::vector<std::pair<Integer, Integer>> v) const
    {
        for (;;)
        {
            std::size_t piv = v.size();
            std::size_t nonzero = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i].second != 0)
                {
                    ++nonzero;
                    if (piv == v.size() || abs(v[i].second) < abs(v[piv].second))
                        piv = i;
                }
            if (nonzero <= 1)
                break;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (i != piv && v[i].second != 0)
                {
                    const Integer q = v[i].second / v[piv].second;
                    v[i].first -= q * v[piv].first;
                    v[i].second -= q * v[piv].second;
                }
        }
        std::pair<Integer, Integer> p{0, 0};
        Integer a = 0;
        for (const auto& e : v)
        {
            if (e.second != 0)
                p = e;
            else
                a = gcd(a, e.first);
        }
        if (a == 0 || p.second == 0)
            throw InvalidInput("QuadraticOrder::ideal: generators do not span a full lattice");
        if (p.second < 0)
            p = {-p.first, -p.second};
        Ideal I{abs(a), mod_floor(p.first, abs(a)), p.second};
        if (I.a % I.c != 0 || I.b % I.c != 0)
            throw CheckFailed("QuadraticOrder::ideal: lattice is not an ideal");
        return I;
    }

    long long d_;
    Integer T_, Nm_, disc_;
    mutable std::optional<QuadElem> fund_;
};

// ---------------------------------------------------------------------------

struct UnitGroup
{
    FgAbGroup group;               // Z/w, or Z/2 + Z for d > 0
    std::vector<QuadElem> generators; // canonical-coordinate generators
};

inline UnitGroup unit_group(const QuadraticOrder& O)
{
    UnitGroup U;
    if (O.d() > 0)
    {
        U.group = FgAbGroup(1, {2});
        U.generators = {O.integer(-1), O.fundamental_unit()};
        return U;
    }
    if (O.d() == -1)
    {
        U.group = FgAbGroup::cyclic(4);
        U.generators = {QuadElem{0, 1, 1}}; // i
    }
    else if (O.d() == -3)
    {
        U.group = FgAbGroup::cyclic(6);
        U.generators = {QuadElem{0, 1, 1}}; // (1 + √-3)/2, a primitive sixth root of unity
    }
    else
    {
        U.group = FgAbGroup::cyclic(2);
        U.generators = {O.integer(-1)};
    }
    return U;
}

inline QuadElem unit_from_coords(const QuadraticOrder& O, const UnitGroup& U, const IntVector& v)
{
    QuadElem r = O.integer(1);
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        Integer k = v[i];
        QuadElem g = U.generators[i];
        if (k < 0)
        {
            g = O.inv(g);
            k = -k;
        }
        for (Integer j = 0; j < k; ++j)
            r = O.mul(r, g);
    }
    return r;
}

/// Coordinates of a unit in the generators of the unit group.
inline IntVector unit_coords(const QuadraticOrder& O, const UnitGroup& U, QuadElem u)
{
    if (!O.is_unit(u))
        throw InvalidInput("unit_coords: not a unit");
    if (O.d() < 0)
    {
        const Integer w = U.group.modulus(0);
        QuadElem p = O.integer(1);
        for (Integer k = 0; k < w; ++k)
        {
            if (p == u)
                return {k};
            p = O.mul(p, U.generators[0]);
        }
        throw CheckFailed("unit_coords: not a root of unity");
    }
    // u = ±ε^k: walk towards ±1 by ε^{∓1}
    const QuadElem eps = U.generators[1], eps_inv = O.inv(eps);
    Integer k = 0;
    for (int guard = 0; guard < 100000; ++guard)
    {
        if (u == O.integer(1))
            return {0, k};
        if (u == O.integer(-1))
            return {1, k};
        const double x = std::abs(O.to_double(u));
        if (x > 1.0)
        {
            u = O.mul(u, eps_inv);
            ++k;
        }
        else
        {
            u = O.mul(u, eps);
            --k;
        }
    }
    throw CheckFailed("unit_coords: unit did not reduce to ±1");
}

/// The map u -> s(u)/u on the unit group, computed on generators.
inline GroupHom unit_twisted_difference(const QuadraticOrder& O, const UnitGroup& U)
{
    IntMatrix M(U.group.dim(), U.group.dim());
    for (std::size_t j = 0; j < U.generators.size(); ++j)
    {
        const QuadElem g = U.generators[j];
        M.set_col(j, unit_coords(O, U, O.div(O.conj(g), g)));
    }
    return GroupHom(U.group, U.group, M);
}

inline GroupWithMap as_units_with_map(const QuadraticOrder& O)
{
    return coker_of_hom(unit_twisted_difference(O, unit_group(O)));
}

inline FgAbGroup as_units(const QuadraticOrder& O) { return as_units_with_map(O).group; }

struct ClassGroupResult
{
    FgAbGroup group;
    std::vector<Ideal> representatives; // unit ideal first
    std::vector<std::vector<std::size_t>> table; // class of rep_i · rep_j
};

namespace detail
{

inline std::size_t class_index(const QuadraticOrder& O, const std::vector<Ideal>& reps, const Ideal& I)
{
    for (std::size_t k = 0; k < reps.size(); ++k)
        if (O.equivalent(I, reps[k]))
            return k;
    return reps.size();
}

} // namespace detail

/**
 * Class group from the prime ideals of norm below the Minkowski bound:
 * breadth-first closure under multiplication by these primes, one
 * representative per class.  `shuffle_seed` permutes the prime order.
 */
inline ClassGroupResult class_group(const QuadraticOrder& O, double disc_bound = QuadraticOrder::default_disc_bound,
                                    std::optional<std::uint64_t> shuffle_seed = std::nullopt)
{
    const double D = std::abs(O.disc().convert_to<double>());
    if (D > disc_bound)
        throw BoundExceeded("class_group: discriminant above the bound", D);
    std::vector<Ideal> gens;
    const long long M = static_cast<long long>(std::floor(O.minkowski_bound()));
    for (long long p = 2; p <= M; ++p)
    {
        bool prime = true;
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0)
                prime = false;
        if (!prime)
            continue;
        for (const auto& P : O.primes_above(p))
            if (P.norm() <= M)
                gens.push_back(P);
    }
    if (shuffle_seed)
    {
        std::mt19937_64 rng(*shuffle_seed);
        std::shuffle(gens.begin(), gens.end(), rng);
    }
    ClassGroupResult r;
    r.representatives.push_back(O.unit_ideal());
    for (std::size_t i = 0; i < r.representatives.size(); ++i)
        for (const auto& P : gens)
        {
            const Ideal J = O.mul(r.representatives[i], P);
            if (detail::class_index(O, r.representatives, J) == r.representatives.size())
                r.representatives.push_back(J);
        }
    const std::size_t h = r.representatives.size();
    r.table.assign(h, std::vector<std::size_t>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
        {
            r.table[i][j] = detail::class_index(O, r.representatives, O.mul(r.representatives[i], r.representatives[j]));
            if (r.table[i][j] == h)
                throw CheckFailed("class_group: product left the set of classes");
        }
    r.group = abelian_group_from_law(h, [&](std::size_t i, std::size_t j) { return r.table[i][j]; }, 0);
    return r;
}

struct DifferencePicardResult
{
    ClassGroupResult class_group;
    FgAbGroup as_units;
    std::vector<std::size_t> fixed_classes;     // classes with a compatible λ
    std::vector<QuadElem> lambdas;              // λ_J with λ_J·s(J) = J, per fixed class
    FgAbGroup group;                            // from explicit multiplication of pairs
    FgAbGroup class_invariants;                 // fixed points of s on Cl, from the group structure
    Integer ses_order = 0;                      // |AS(units)| · |Cl^s|
    bool ses_exact = false;
    bool image_is_all_invariants = false;
};

/**
 * Pairs (I, λ) with λ·s(I) = I modulo (I, λ) ~ (cI, λ·c/s(c)), c ∈ L*, under
 * (I, λ)(J, μ) = (IJ, λμ).  Every pair is equivalent to (J, λ_J·u) with J a
 * class representative, u a unit, and u determined up to the image of
 * c -> c/s(c) on units; the multiplication is carried out on these normal
 * forms and the group type is read off the resulting table.
 */
inline DifferencePicardResult difference_picard(const QuadraticOrder& O, std::optional<std::uint64_t> shuffle_seed = std::nullopt)
{
    DifferencePicardResult r;
    r.class_group = class_group(O, QuadraticOrder::default_disc_bound, shuffle_seed);
    const auto& reps = r.class_group.representatives;
    const UnitGroup U = unit_group(O);
    const GroupWithMap AS = as_units_with_map(O);
    r.as_units = AS.group;

    // λ_J for each class fixed by conjugation
    for (std::size_t i = 0; i < reps.size(); ++i)
    {
        const Ideal& J = reps[i];
        if (detail::class_index(O, reps, O.conj(J)) != i)
            continue;
        // J = λ·s(J)  <=>  J² = (λ·N(J))
        auto alpha = O.principal_generator(O.mul(J, J));
        if (!alpha)
            continue;
        const QuadElem lam = O.div(*alpha, O.integer(J.norm()));
        if (!(O.mul(O.conj(J), J) == O.scale(O.unit_ideal(), J.norm())) || !(O.mul(O.principal(*alpha), O.conj(J)) == O.scale(J, J.norm())))
            throw CheckFailed("difference_picard: λ·s(J) = J failed");
        r.fixed_classes.push_back(i);
        r.lambdas.push_back(lam);
    }

    const std::size_t nf = r.fixed_classes.size();
    const std::size_t na = AS.group.order().convert_to<std::size_t>();
    auto as_unit = [&](std::size_t k) { return unit_from_coords(O, U, AS.presentation.lift(AS.group.element_at(k))); };
    auto as_index = [&](const QuadElem& u) { return AS.group.index_of(AS.map.apply(unit_coords(O, U, u))); };
    auto fixed_pos = [&](std::size_t cls) {
        return static_cast<std::size_t>(std::find(r.fixed_classes.begin(), r.fixed_classes.end(), cls) - r.fixed_classes.begin());
    };
    // element (f, k) ↦ f·na + k; identity = (class of R, unit 1)
    auto law = [&](std::size_t x, std::size_t y) {
        const std::size_t fa = x / na, ka = x % na, fb = y / na, kb = y % na;
        const std::size_t ca = r.fixed_classes[fa], cb = r.fixed_classes[fb];
        const std::size_t cc = r.class_group.table[ca][cb];
        const std::size_t fc = fixed_pos(cc);
        if (fc == nf)
            throw CheckFailed("difference_picard: product of fixed classes is not fixed");
        // J_a J_b = γ J_c with γ = β / N(J_c), (β) = J_a J_b s(J_c)
        const Ideal prod = O.mul(reps[ca], reps[cb]);
        auto beta = O.principal_generator(O.mul(prod, O.conj(reps[cc])));
        if (!beta)
            throw CheckFailed("difference_picard: class table inconsistent");
        const QuadElem gamma = O.div(*beta, O.integer(reps[cc].norm()));
        // (J_a J_b, λ) ~ (γ^{-1} J_a J_b, λ·γ^{-1}/s(γ^{-1})) = (J_c, λ·s(γ)/γ)
        QuadElem lam = O.mul(O.mul(r.lambdas[fa], as_unit(ka)), O.mul(r.lambdas[fb], as_unit(kb)));
        lam = O.mul(lam, O.div(O.conj(gamma), gamma));
        const QuadElem w = O.div(lam, r.lambdas[fc]);
        if (!O.is_unit(w))
            throw CheckFailed("difference_picard: normal form did not produce a unit");
        return fc * na + as_index(w);
    };
    const std::size_t unit_fixed = fixed_pos(0);
    if (unit_fixed != 0)
        throw CheckFailed("difference_picard: the trivial class must come first");
    r.group = abelian_group_from_law(nf * na, law, as_index(O.integer(1)));

    // SES side, from the group structures alone
    r.class_invariants = invariants(SigmaModule(r.class_group.group, GroupHom::scalar(r.class_group.group, -1)));
    r.ses_order = r.as_units.order() * Integer(nf);
    r.ses_exact = r.group.order() == r.ses_order;
    r.image_is_all_invariants = Integer(nf) == r.class_invariants.order();
    return r;
}

struct UnitDescentReport
{
    FgAbGroup as_units;
    FgAbGroup fixed_ring_units; // units of Z
    bool match = false;
};

inline UnitDescentReport unit_descent_report(const QuadraticOrder& O)
{
    UnitDescentReport r;
    r.as_units = as_units(O);
    r.fixed_ring_units = FgAbGroup::cyclic(2); // Z* = {±1}
    r.match = r.as_units == r.fixed_ring_units;
    return r;
}

} // namespace diffcoh

#endif // DIFFCOH_QUADRATIC_HPP
