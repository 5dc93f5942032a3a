/**
 * Difference Galois cohomology and torsor classification over a finite
 * difference field (F_q, x -> x^(p^r)).
 *
 * Every classification here comes in two flavours: a formula (cokernels,
 * invariants, short exact sequences) and an exhaustive enumeration of the
 * torsor data with a union-find over explicit isomorphisms.
 */
#ifndef DIFFCOH_GALOIS_HPP
#define DIFFCOH_GALOIS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <unordered_map>

#include "complex.hpp"
#include "finite_abelian.hpp"
#include "finite_field.hpp"
#include "sigma_module.hpp"

namespace diffcoh
{

/// The difference field (k, s) with s = Frob^r.
struct DifferenceField
{
    FiniteField k;
    std::uint64_t r = 0;

    DifferenceField(FiniteField field, std::uint64_t frob_power)
        : k(std::move(field)), r(frob_power % static_cast<std::uint64_t>(k.m()))
    {
    }

    int s(int a) const { return k.frob(a, r); }
    std::uint64_t q() const { return k.order(); }
    /// p^r, the exponent of s on k*.
    std::uint64_t s_exponent() const { return ipow(static_cast<std::uint64_t>(k.p()), r); }
};

// ---------------------------------------------------------------------------
// Multiplicative group: AS(G_m(k), s) and rank-one difference modules

struct MultiplicativeAS
{
    FgAbGroup group;               // coker(u -> s(u)/u) on k*
    GroupWithMap coinvariants;     // projection from Z/(q-1) (discrete logs)
    std::vector<int> representatives; // one field element per class, in class-coordinate order

    /// Class coordinates of a nonzero field element.
    IntVector class_of(const DifferenceField& F, int u) const
    {
        if (coinvariants.map.source().dim() == 0) // q = 2
            return coinvariants.map.apply({});
        return coinvariants.map.apply({Integer(F.k.dlog(u))});
    }
};

inline SigmaModule multiplicative_sigma_module(const DifferenceField& F)
{
    return SigmaModule::cyclic(Integer(F.q() - 1), Integer(F.s_exponent()));
}

inline MultiplicativeAS as_multiplicative(const DifferenceField& F)
{
    MultiplicativeAS out;
    SigmaModule M = multiplicative_sigma_module(F);
    out.coinvariants = coinvariants_with_map(M);
    out.group = out.coinvariants.group;
    const std::size_t n = out.group.order().convert_to<std::size_t>();
    out.representatives.assign(n, 0);
    std::vector<char> seen(n, 0);
    std::size_t found = 0;
    for (std::uint64_t t = 0; t < F.q() - 1 && found < n; ++t)
    {
        int u = F.k.exp(t);
        std::size_t idx = out.group.index_of(out.class_of(F, u));
        if (!seen[idx])
        {
            seen[idx] = 1;
            out.representatives[idx] = u;
            ++found;
        }
    }
    return out;
}

/// Square matrices over k, row-major field codes.
struct FieldMatrix
{
    std::size_t n = 0;
    std::vector<int> a;

    int at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    int& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

    static FieldMatrix identity(std::size_t n)
    {
        FieldMatrix m{n, std::vector<int>(n * n, 0)};
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }
    friend bool operator==(const FieldMatrix& x, const FieldMatrix& y) { return x.n == y.n && x.a == y.a; }
};

inline FieldMatrix mat_mul(const FiniteField& k, const FieldMatrix& x, const FieldMatrix& y)
{
    FieldMatrix z{x.n, std::vector<int>(x.n * x.n, 0)};
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t l = 0; l < x.n; ++l)
        {
            const int xil = x.at(i, l);
            if (xil == 0)
                continue;
            for (std::size_t j = 0; j < x.n; ++j)
                z.at(i, j) = k.add(z.at(i, j), k.mul(xil, y.at(l, j)));
        }
    return z;
}

inline FieldMatrix mat_frob(const DifferenceField& F, FieldMatrix x)
{
    for (auto& v : x.a)
        v = F.s(v);
    return x;
}

inline int mat_det(const FiniteField& k, FieldMatrix x)
{
    const std::size_t n = x.n;
    int det = 1;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t piv = c;
        while (piv < n && x.at(piv, c) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c)
        {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(x.at(piv, j), x.at(c, j));
            det = k.neg(det);
        }
        det = k.mul(det, x.at(c, c));
        const int inv = k.inv(x.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i)
        {
            const int f = k.mul(x.at(i, c), inv);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < n; ++j)
                x.at(i, j) = k.sub(x.at(i, j), k.mul(f, x.at(c, j)));
        }
    }
    return det;
}

/// B·C = s(C)·A
inline bool intertwines(const DifferenceField& F, const FieldMatrix& A, const FieldMatrix& B, const FieldMatrix& C)
{
    return mat_mul(F.k, B, C) == mat_mul(F.k, mat_frob(F, C), A);
}

/**
 * Some invertible C with B·C = s(C)·A, or nothing.  For n = 1 the answer comes
 * from a discrete-log congruence; otherwise all q^(n²) matrices are tried.
 */
inline std::optional<FieldMatrix> difference_module_iso(const DifferenceField& F, const FieldMatrix& A, const FieldMatrix& B,
                                                        double bound = 1e8)
{
    const FiniteField& k = F.k;
    if (A.n != B.n || A.a.size() != A.n * A.n || B.a.size() != B.n * B.n)
        throw InvalidInput("difference_module_iso: shape mismatch");
    if (mat_det(k, A) == 0 || mat_det(k, B) == 0)
        throw InvalidInput("difference_module_iso: A and B must be invertible");
    const std::size_t n = A.n;
    if (n == 1)
    {
        // s(c)/c = b/a  <=>  (p^r - 1)·log c ≡ log(b/a)  mod q-1
        const Integer N = Integer(F.q() - 1);
        const Integer e = Integer(F.s_exponent()) - 1;
        const Integer t = Integer(k.dlog(k.div(B.a[0], A.a[0])));
        const Integer g = gcd(e, N);
        if (N == 1 || t % g == 0)
        {
            Integer c = 0;
            if (N != 1)
            {
                Integer x, y;
                const Integer Ng = N / g;
                extended_gcd(e / g, Ng, x, y);
                c = mod_floor((t / g) * x, Ng);
            }
            FieldMatrix C{1, {k.exp(c.convert_to<std::uint64_t>())}};
            if (!intertwines(F, A, B, C))
                throw CheckFailed("difference_module_iso: closed form produced a wrong witness");
            return C;
        }
        return std::nullopt;
    }
    const double space = std::pow(static_cast<double>(F.q()), static_cast<double>(n * n));
    if (space > bound)
        throw BoundExceeded("difference_module_iso: matrix space exceeds the enumeration bound", space);
    FieldMatrix C{n, std::vector<int>(n * n, 0)};
    const int q = static_cast<int>(F.q());
    for (;;)
    {
        if (mat_det(k, C) != 0 && intertwines(F, A, B, C))
            return C;
        std::size_t i = 0;
        for (; i < C.a.size(); ++i)
        {
            if (++C.a[i] < q)
                break;
            C.a[i] = 0;
        }
        if (i == C.a.size())
            return std::nullopt;
    }
}

/// Exhaustive classification of rank-one difference modules (k, a): classes of k* under a ~ s(c)·a/c.
inline std::vector<std::vector<int>> classify_rank_one(const DifferenceField& F)
{
    const std::size_t q = F.q();
    DisjointSets ds(q); // index 0 (the zero element) stays a singleton and is dropped
    for (int a = 1; a < static_cast<int>(q); ++a)
        for (int c = 1; c < static_cast<int>(q); ++c)
        {
            // B C = s(C) A with A = (a), C = (c)  =>  B = s(c)·a/c
            const int b = F.k.mul(F.k.mul(F.s(c), a), F.k.inv(c));
            ds.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        }
    std::vector<std::vector<int>> out;
    for (const auto& cls : ds.classes())
    {
        if (cls.front() == 0)
            continue;
        std::vector<int> c;
        for (auto v : cls)
            c.push_back(static_cast<int>(v));
        out.push_back(c);
    }
    return out;
}

struct PicSigmaField
{
    FgAbGroup group;
    std::size_t exhaustive_classes = 0;
    bool agree = false;
};

inline PicSigmaField pic_sigma_field(const DifferenceField& F, std::uint64_t exhaustive_limit = 1u << 12)
{
    PicSigmaField out;
    out.group = as_multiplicative(F).group;
    if (F.q() <= exhaustive_limit)
    {
        out.exhaustive_classes = classify_rank_one(F).size();
        out.agree = Integer(out.exhaustive_classes) == out.group.order();
    }
    else
        out.agree = true;
    return out;
}

struct LinearlyClosedWitness
{
    int degree = 0;               // e
    Poly extension_modulus;       // over k, degree e
    std::vector<int> solution;    // x in F_{q^e}, coefficients in k
    bool verified = false;        // x^(p-1) == rep checked in F_{q^e}
};

/**
 * Least e <= p-1 such that x^(p-1) = rep has a solution in F_{q^e}, with the
 * solution.  Solvability is read off rep^((q^e-1)/(p-1)) = 1; the root is
 * then extracted with discrete logs in F_{q^e} and verified.
 */
inline LinearlyClosedWitness linearly_closed_witness(const DifferenceField& F, int rep)
{
    if (F.r != 1 % static_cast<std::uint64_t>(F.k.m()))
        throw InvalidInput("linearly_closed_witness: requires s = Frob_p (r = 1)");
    if (rep == 0)
        throw InvalidInput("linearly_closed_witness: class representative must be nonzero");
    const std::uint64_t p = static_cast<std::uint64_t>(F.k.p());
    const std::uint64_t q = F.q();
    const std::uint64_t k = p - 1;
    for (int e = 1; e <= static_cast<int>(std::max<std::uint64_t>(k, 1)); ++e)
    {
        const std::uint64_t Qe = ipow(q, static_cast<std::uint64_t>(e));
        // rep ∈ k*, so the exponent can be reduced modulo q-1 (exact with 128-bit-safe Integer)
        const Integer ex = (Integer(Qe) - 1) / k;
        const std::uint64_t ex_mod = (ex % (q - 1 == 0 ? 1 : q - 1)).convert_to<std::uint64_t>();
        if (F.k.pow(rep, ex_mod) != 1)
            continue;
        ExtensionField E(F.k, e);
        LinearlyClosedWitness w;
        w.degree = e;
        w.extension_modulus = E.modulus();
        const std::uint64_t N = E.order() - 1;
        const ExtensionField::Elem a = E.embed(rep);
        ExtensionField::Elem x;
        if (N == 1 || k == 1)
            x = a;
        else
        {
            const ExtensionField::Elem g = E.primitive_element();
            const std::uint64_t t = E.dlog(g, a);
            const Integer gg = gcd(Integer(k), Integer(N));
            if (Integer(t) % gg != 0)
                throw CheckFailed("linearly_closed_witness: solvability test and discrete log disagree");
            Integer xi, yi;
            const Integer Ng = Integer(N) / gg;
            extended_gcd(Integer(k) / gg, Ng, xi, yi);
            const Integer u = mod_floor((Integer(t) / gg) * xi, Ng);
            x = E.pow(g, u.convert_to<std::uint64_t>());
        }
        w.solution = x;
        w.verified = E.pow(x, k) == a;
        return w;
    }
    throw CheckFailed("linearly_closed_witness: no extension of degree <= p-1 works");
}

// ---------------------------------------------------------------------------
// Additive group G_a^n with the recurrence structure

/// λ-coefficients of the recurrence, or an explicit F_p-matrix on k.
struct AdditiveOperatorSpec
{
    std::vector<int> lambdas;
    std::optional<IntMatrix> matrix;
};

/// x -> λ0 x + λ1 s(x) + ... + λ_{n-1} s^{n-1}(x) as an F_p-matrix on k.
inline IntMatrix weighted_frobenius_operator(const DifferenceField& F, const AdditiveOperatorSpec& spec)
{
    if (spec.matrix)
        return *spec.matrix;
    return F.k.fp_matrix([&](int x) {
        int acc = 0, sx = x;
        for (int l : spec.lambdas)
        {
            acc = F.k.add(acc, F.k.mul(l, sx));
            sx = F.s(sx);
        }
        return acc;
    });
}

/// x -> s^n(x) - Σ λ_j s^j(x): the obstruction map of translations between the torsors σ_λ.
inline IntMatrix torsor_operator(const DifferenceField& F, const std::vector<int>& lambdas)
{
    return F.k.fp_matrix([&](int x) {
        int acc = 0, sx = x;
        for (int l : lambdas)
        {
            acc = F.k.sub(acc, F.k.mul(l, sx));
            sx = F.s(sx);
        }
        return F.k.add(acc, sx);
    });
}

/// Cokernel of an F_p-linear map on k viewed as a Z-module: (Z/p)^(m - rank).
inline GroupWithMap fp_cokernel(const FiniteField& k, const IntMatrix& L)
{
    FgAbGroup V = FgAbGroup::from_moduli(IntVector(static_cast<std::size_t>(k.m()), Integer(k.p())));
    // V is (Z/p)^m in canonical form; its coordinates are the digits in order
    return coker_of_hom(GroupHom(V, V, L));
}

inline FgAbGroup h1_sigma_ga(const DifferenceField& F, const AdditiveOperatorSpec& spec)
{
    return fp_cokernel(F.k, weighted_frobenius_operator(F, spec)).group;
}

struct GaClassification
{
    std::vector<std::vector<int>> by_formula;     // classes of λ mod im(weighted operator)
    std::vector<std::vector<int>> by_enumeration; // classes of isomorphic torsors σ_λ
    std::vector<std::vector<int>> by_torsor_operator; // classes of λ mod im(torsor operator)
    bool formula_agrees = false;
    bool torsor_operator_agrees = false;
    std::size_t translations_checked = 0;
};

namespace detail
{

/// Partition of k by cosets of the image of an F_p-matrix.
inline std::vector<std::vector<int>> cosets_of_image(const FiniteField& k, const IntMatrix& L)
{
    const int q = static_cast<int>(k.order());
    std::vector<char> in_image(static_cast<std::size_t>(q), 0);
    for (int x = 0; x < q; ++x)
    {
        auto d = k.digits(x);
        std::vector<int> y(static_cast<std::size_t>(k.m()), 0);
        for (int i = 0; i < k.m(); ++i)
        {
            Integer acc = 0;
            for (int j = 0; j < k.m(); ++j)
                acc += L(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * d[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = static_cast<int>(mod_floor(acc, k.p()));
        }
        in_image[static_cast<std::size_t>(k.from_digits(y))] = 1;
    }
    DisjointSets ds(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a)
        for (int h = 0; h < q; ++h)
            if (in_image[static_cast<std::size_t>(h)])
                ds.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(k.add(a, h)));
    std::vector<std::vector<int>> out;
    for (const auto& c : ds.classes())
        out.emplace_back(c.begin(), c.end());
    return out;
}

} // namespace detail

/**
 * Classes of the torsors (G_a^n, σ_λ), λ ∈ k, where
 * σ_λ(a1..an) = (a2, ..., an, λ0 a1 + ... + λ_{n-1} an + λ).
 * Enumeration: translation by t is an isomorphism σ_λ1 -> σ_λ2 iff
 * σ_λ2(a + t) = σ_λ1(a) + s(t) for all a; the test is run literally at a = 0
 * and a = (1, ..., 1) for every t ∈ k^n.
 */
inline GaClassification classify_ga_torsors(const DifferenceField& F, const std::vector<int>& lambdas, double bound = 1e7)
{
    const FiniteField& k = F.k;
    const std::size_t n = lambdas.size();
    if (n == 0)
        throw InvalidInput("classify_ga_torsors: need at least one lambda");
    const int q = static_cast<int>(F.q());
    const double space = std::pow(static_cast<double>(q), static_cast<double>(n));
    if (space > bound)
        throw BoundExceeded("classify_ga_torsors: translation space exceeds the enumeration bound", space);
    auto sigma = [&](const std::vector<int>& a, int lam) {
        std::vector<int> b(n);
        for (std::size_t i = 0; i + 1 < n; ++i)
            b[i] = a[i + 1];
        int last = lam;
        for (std::size_t j = 0; j < n; ++j)
            last = k.add(last, k.mul(lambdas[j], a[j]));
        b[n - 1] = last;
        return b;
    };
    auto vadd = [&](std::vector<int> a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < n; ++i)
            a[i] = k.add(a[i], b[i]);
        return a;
    };
    auto vs = [&](std::vector<int> a) {
        for (auto& v : a)
            v = F.s(v);
        return a;
    };
    GaClassification out;
    DisjointSets ds(static_cast<std::size_t>(q));
    std::vector<int> t(n, 0);
    const std::vector<int> zero(n, 0), ones(n, 1);
    for (;;)
    {
        // λ2 is forced by a = 0: σ_0(t) + λ2 e_n = λ1 e_n + s(t)
        const std::vector<int> lhs0 = sigma(t, 0);
        const std::vector<int> st = vs(t);
        bool shape = true;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (lhs0[i] != st[i])
                shape = false;
        if (shape)
        {
            const int delta = k.sub(st[n - 1], lhs0[n - 1]); // λ2 - λ1
            for (int l1 = 0; l1 < q; ++l1)
            {
                const int l2 = k.add(l1, delta);
                bool ok = true;
                for (const auto& a : {zero, ones})
                    if (sigma(vadd(a, t), l2) != vadd(sigma(a, l1), st))
                        ok = false;
                if (ok)
                    ds.unite(static_cast<std::size_t>(l1), static_cast<std::size_t>(l2));
            }
        }
        ++out.translations_checked;
        std::size_t i = 0;
        for (; i < n; ++i)
        {
            if (++t[i] < q)
                break;
            t[i] = 0;
        }
        if (i == n)
            break;
    }
    for (const auto& c : ds.classes())
        out.by_enumeration.emplace_back(c.begin(), c.end());
    out.by_formula = detail::cosets_of_image(k, weighted_frobenius_operator(F, {lambdas, std::nullopt}));
    out.by_torsor_operator = detail::cosets_of_image(k, torsor_operator(F, lambdas));
    out.formula_agrees = out.by_formula == out.by_enumeration;
    out.torsor_operator_agrees = out.by_torsor_operator == out.by_enumeration;
    return out;
}

// ---------------------------------------------------------------------------
// μ2 torsors

struct Mu2Result
{
    std::size_t ses_order = 0;        // |coinvariants of μ2(k)| · |(k*/(k*)^2)^σ|
    FgAbGroup coinvariant_part;       // μ2(k)_σ
    FgAbGroup invariant_part;         // (k*/(k*)^2)^σ
    std::vector<std::pair<int, int>> pairs;                 // all (a, b) with s(a) = a b^2
    std::vector<std::vector<std::size_t>> classes;          // indices into pairs; trivial class first
    FgAbGroup class_group;            // classes under componentwise multiplication
    bool agree = false;
};

/**
 * Torsors (a, b) with s(a) = a·b²; (a1, b1) ~ (a2, b2) iff a2 = c²·a1 and
 * b2·c = s(c)·b1 for some c ∈ k*.  This is the relation induced by x -> c·x
 * intertwining x -> b1·x and x -> b2·x between the algebras k[x]/(x²-a).
 */
inline Mu2Result h1_sigma_mu2(const DifferenceField& F)
{
    const FiniteField& k = F.k;
    if (k.p() == 2)
        throw InvalidInput("μ2 not étale in characteristic 2, out of scope");
    const int q = static_cast<int>(F.q());
    Mu2Result out;
    // formula side
    SigmaModule mu2 = SigmaModule::cyclic(2, 1); // s fixes ±1
    out.coinvariant_part = coinvariants(mu2);
    SigmaModule Mult = multiplicative_sigma_module(F);
    GroupWithMap sq = coker_of_hom(GroupHom::scalar(Mult.carrier(), 2)); // k*/(k*)^2
    // induced action of s on the square classes
    IntMatrix ind(sq.group.dim(), sq.group.dim());
    for (std::size_t j = 0; j < sq.group.dim(); ++j)
        ind.set_col(j, sq.map.apply(Mult.endo().apply(sq.presentation.lift(j))));
    out.invariant_part = invariants(SigmaModule(sq.group, GroupHom(sq.group, sq.group, ind)));
    out.ses_order = (out.coinvariant_part.order() * out.invariant_part.order()).convert_to<std::size_t>();

    // enumeration side
    std::map<std::pair<int, int>, std::size_t> index;
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (F.s(a) == k.mul(a, k.mul(b, b)))
            {
                index[{a, b}] = out.pairs.size();
                out.pairs.push_back({a, b});
            }
    DisjointSets ds(out.pairs.size());
    for (std::size_t i = 0; i < out.pairs.size(); ++i)
        for (int c = 1; c < q; ++c)
        {
            auto [a, b] = out.pairs[i];
            const int a2 = k.mul(k.mul(c, c), a);
            const int b2 = k.div(k.mul(F.s(c), b), c);
            auto it = index.find({a2, b2});
            if (it == index.end())
                throw CheckFailed("h1_sigma_mu2: isomorphism left the set of torsor pairs");
            ds.unite(i, it->second);
        }
    out.classes = ds.classes(); // pair (1, 1) is index 0, so the trivial class comes first
    std::vector<std::size_t> class_of(out.pairs.size());
    for (std::size_t c = 0; c < out.classes.size(); ++c)
        for (auto i : out.classes[c])
            class_of[i] = c;
    const std::size_t n = out.classes.size();
    out.class_group = abelian_group_from_law(
        n,
        [&](std::size_t x, std::size_t y) {
            auto [a1, b1] = out.pairs[out.classes[x].front()];
            auto [a2, b2] = out.pairs[out.classes[y].front()];
            return class_of[index.at({k.mul(a1, a2), k.mul(b1, b2)})];
        },
        0);
    out.agree = n == out.ses_order;
    return out;
}

// ---------------------------------------------------------------------------
// AS(GL_n(k), s)

struct GlnOrbits
{
    std::size_t group_order = 0;
    std::vector<FieldMatrix> representatives; // orbit of the identity first
    std::vector<std::size_t> orbit_sizes;
};

/// Orbits of X -> s(C)·X·C^-1 on GL_n(k), through a generating set of GL_n(k).
inline GlnOrbits as_gln(const DifferenceField& F, std::size_t n, double bound = 1e7)
{
    const FiniteField& k = F.k;
    const std::uint64_t q = F.q();
    const double space = std::pow(static_cast<double>(q), static_cast<double>(n * n));
    if (n == 0 || space > bound)
        throw BoundExceeded("as_gln: matrix space exceeds the enumeration bound", space);
    const std::size_t total = static_cast<std::size_t>(space);
    auto decode = [&](std::size_t code) {
        FieldMatrix m{n, std::vector<int>(n * n)};
        for (auto& v : m.a)
        {
            v = static_cast<int>(code % q);
            code /= q;
        }
        return m;
    };
    auto encode = [&](const FieldMatrix& m) {
        std::size_t code = 0;
        for (std::size_t i = m.a.size(); i > 0; --i)
            code = code * q + static_cast<std::size_t>(m.a[i - 1]);
        return code;
    };
    std::vector<std::size_t> slot(total, SIZE_MAX);
    std::vector<std::size_t> elems;
    for (std::size_t c = 0; c < total; ++c)
        if (mat_det(k, decode(c)) != 0)
        {
            slot[c] = elems.size();
            elems.push_back(c);
        }
    // generators: diag(γ, 1, ..., 1) and transvections I + x^i e_ab
    std::vector<FieldMatrix> gens;
    {
        FieldMatrix d = FieldMatrix::identity(n);
        d.at(0, 0) = k.generator();
        gens.push_back(d);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
            {
                if (a == b)
                    continue;
                int basis = 1;
                for (int i = 0; i < k.m(); ++i)
                {
                    FieldMatrix t = FieldMatrix::identity(n);
                    t.at(a, b) = basis;
                    gens.push_back(t);
                    basis *= k.p();
                }
            }
    }
    auto inverse = [&](const FieldMatrix& g) {
        // g^(-1) by search over the group is too slow; use Gauss-Jordan
        FieldMatrix a = g, inv = FieldMatrix::identity(n);
        for (std::size_t c = 0; c < n; ++c)
        {
            std::size_t piv = c;
            while (a.at(piv, c) == 0)
                ++piv;
            for (std::size_t j = 0; j < n; ++j)
            {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
            const int iv = k.inv(a.at(c, c));
            for (std::size_t j = 0; j < n; ++j)
            {
                a.at(c, j) = k.mul(a.at(c, j), iv);
                inv.at(c, j) = k.mul(inv.at(c, j), iv);
            }
            for (std::size_t i = 0; i < n; ++i)
            {
                if (i == c || a.at(i, c) == 0)
                    continue;
                const int f = a.at(i, c);
                for (std::size_t j = 0; j < n; ++j)
                {
                    a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(c, j)));
                    inv.at(i, j) = k.sub(inv.at(i, j), k.mul(f, inv.at(c, j)));
                }
            }
        }
        return inv;
    };
    DisjointSets ds(elems.size());
    for (const auto& g : gens)
    {
        const FieldMatrix sg = mat_frob(F, g), gi = inverse(g);
        for (std::size_t i = 0; i < elems.size(); ++i)
        {
            const FieldMatrix y = mat_mul(k, mat_mul(k, sg, decode(elems[i])), gi);
            ds.unite(i, slot[encode(y)]);
        }
    }
    GlnOrbits out;
    out.group_order = elems.size();
    auto cls = ds.classes();
    const std::size_t id_slot = slot[encode(FieldMatrix::identity(n))];
    auto it = std::find_if(cls.begin(), cls.end(), [&](const auto& c) { return std::binary_search(c.begin(), c.end(), id_slot); });
    std::rotate(cls.begin(), it, it + 1);
    for (const auto& c : cls)
    {
        out.representatives.push_back(decode(elems[c.front()]));
        out.orbit_sizes.push_back(c.size());
    }
    out.representatives.front() = FieldMatrix::identity(n);
    return out;
}

// ---------------------------------------------------------------------------
// Cyclic Galois cohomology and its difference version

/// Finite module over Z/N = <γ> with a commuting difference map σ.
struct CyclicGaloisData
{
    std::size_t N = 1;
    FgAbGroup M;
    GroupHom gamma;
    GroupHom sigma;

    CyclicGaloisData() = default;
    CyclicGaloisData(std::size_t level, FgAbGroup module, GroupHom g, GroupHom s)
        : N(level), M(std::move(module)), gamma(std::move(g)), sigma(std::move(s))
    {
        if (N == 0)
            throw InvalidInput("CyclicGaloisData: level must be >= 1");
        if (!M.is_finite())
            throw InvalidInput("CyclicGaloisData: module must be finite");
        GroupHom p = GroupHom::identity(M);
        for (std::size_t i = 0; i < N; ++i)
            p = gamma.compose(p);
        if (!(p == GroupHom::identity(M)))
            throw InvalidInput("CyclicGaloisData: gamma^N != id");
        if (!(sigma.compose(gamma) == gamma.compose(sigma)))
            throw InvalidInput("CyclicGaloisData: sigma does not commute with gamma");
    }

    GroupHom norm() const
    {
        GroupHom acc = GroupHom::zero(M, M), p = GroupHom::identity(M);
        for (std::size_t i = 0; i < N; ++i)
        {
            acc = acc + p;
            p = gamma.compose(p);
        }
        return acc;
    }
};

/// M -(γ-1)-> M -(Norm)-> M -(γ-1)-> ... with levels 0..top.
inline CochainComplex periodic_complex(const CyclicGaloisData& d, std::size_t top)
{
    std::vector<FgAbGroup> levels(top + 1, d.M);
    std::vector<GroupHom> diffs;
    const GroupHom dm = d.gamma - GroupHom::identity(d.M), nm = d.norm();
    for (std::size_t i = 0; i < top; ++i)
        diffs.push_back(i % 2 == 0 ? dm : nm);
    return CochainComplex(levels, diffs);
}

inline FgAbGroup cyclic_galois_cohomology(const CyclicGaloisData& d, std::size_t n)
{
    return periodic_complex(d, n + 1).cohomology_at(n).group();
}

struct DifferenceGaloisResult
{
    FgAbGroup group;
    SesReport ses;
};

/// H^n of the cone of id - σ on the periodic complex, with its short exact sequence.
inline DifferenceGaloisResult difference_galois_cohomology(const CyclicGaloisData& d, std::size_t n)
{
    const CochainComplex C = periodic_complex(d, n + 1);
    std::vector<GroupHom> comps(n + 2, GroupHom::identity(d.M) - d.sigma);
    TwoRowBicomplex B(ChainMap(C, C, comps));
    DifferenceGaloisResult r;
    r.ses = extract_ses(B, n);
    r.group = r.ses.middle;
    return r;
}

/// μ_n(F_{q^N}) as Z/gcd(n, q^N - 1) with γ = ×q and σ = ×p^r.
inline CyclicGaloisData mu_n_galois_data(const DifferenceField& F, std::uint64_t n, std::size_t N)
{
    const Integer q = Integer(F.q());
    Integer qN = 1;
    for (std::size_t i = 0; i < N; ++i)
        qN *= q;
    const Integer order = gcd(Integer(n), qN - 1);
    FgAbGroup M = FgAbGroup::cyclic(order);
    return CyclicGaloisData(N, M, GroupHom::scalar(M, q), GroupHom::scalar(M, Integer(F.s_exponent())));
}

} // namespace diffcoh

#endif // DIFFCOH_GALOIS_HPP
