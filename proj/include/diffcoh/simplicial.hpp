/**
 * Finite simplicial complexes, ordered simplicial cochains with coefficients
 * in a finitely generated abelian group, and difference cohomology of a
 * self-map with constant coefficients (A, f): the cone of id - f∘σ^#.
 */
#ifndef DIFFCOH_SIMPLICIAL_HPP
#define DIFFCOH_SIMPLICIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "sigma_module.hpp"

namespace diffcoh
{

using Simplex = std::vector<std::size_t>; // sorted vertex indices

class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Builds the complex from maximal (or all) simplices; faces are added.
    SimplicialComplex(std::vector<std::string> vertices, const std::vector<Simplex>& simplices, bool require_closed = false)
        : vertices_(std::move(vertices))
    {
        std::set<Simplex> all;
        for (Simplex s : simplices)
        {
            std::sort(s.begin(), s.end());
            if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end())
                throw InvalidInput("SimplicialComplex: simplex must be a nonempty set of distinct vertices");
            if (s.back() >= vertices_.size())
                throw InvalidInput("SimplicialComplex: vertex index out of range");
            all.insert(s);
        }
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            if (!all.count(Simplex{v}))
            {
                if (require_closed)
                    throw InvalidInput("SimplicialComplex: vertex missing from simplex list");
                all.insert(Simplex{v});
            }
        std::set<Simplex> closed = all;
        for (const auto& s : all)
            add_faces(s, closed, require_closed, all);
        std::size_t top = 0;
        for (const auto& s : closed)
            top = std::max(top, s.size());
        by_dim_.assign(top, {});
        for (const auto& s : closed)
            by_dim_[s.size() - 1].push_back(s);
        for (auto& v : by_dim_)
            std::sort(v.begin(), v.end());
    }

    /// Boundary of an n-gon: vertices 0..n-1, edges {i, i+1} and {0, n-1}.
    static SimplicialComplex polygon(std::size_t n)
    {
        if (n < 3)
            throw InvalidInput("polygon: need at least 3 vertices");
        std::vector<std::string> v;
        std::vector<Simplex> e;
        for (std::size_t i = 0; i < n; ++i)
        {
            v.push_back(std::to_string(i));
            e.push_back({i, (i + 1) % n});
        }
        return SimplicialComplex(v, e);
    }

    /// Full simplex on n+1 vertices.
    static SimplicialComplex simplex(std::size_t n)
    {
        std::vector<std::string> v;
        Simplex s;
        for (std::size_t i = 0; i <= n; ++i)
        {
            v.push_back(std::to_string(i));
            s.push_back(i);
        }
        return SimplicialComplex(v, {s});
    }

    static SimplicialComplex point() { return SimplicialComplex({"0"}, {{0}}); }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    std::size_t dimension() const noexcept { return by_dim_.empty() ? 0 : by_dim_.size() - 1; }
    std::size_t count(std::size_t n) const { return n < by_dim_.size() ? by_dim_[n].size() : 0; }
    const std::vector<Simplex>& simplices(std::size_t n) const
    {
        static const std::vector<Simplex> none;
        return n < by_dim_.size() ? by_dim_[n] : none;
    }

    std::vector<Simplex> all_simplices() const
    {
        std::vector<Simplex> out;
        for (const auto& v : by_dim_)
            out.insert(out.end(), v.begin(), v.end());
        return out;
    }

    std::optional<std::size_t> index_of(const Simplex& s) const
    {
        if (s.empty() || s.size() > by_dim_.size())
            return std::nullopt;
        const auto& v = by_dim_[s.size() - 1];
        auto it = std::lower_bound(v.begin(), v.end(), s);
        if (it == v.end() || *it != s)
            return std::nullopt;
        return static_cast<std::size_t>(it - v.begin());
    }

    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Integer coboundary δ^n : C^n -> C^{n+1}, (δφ)(v0..v_{n+1}) = Σ (-1)^i φ(face_i).
    IntMatrix coboundary(std::size_t n) const
    {
        IntMatrix d(count(n + 1), count(n));
        for (std::size_t r = 0; r < count(n + 1); ++r)
        {
            const Simplex& s = by_dim_[n + 1][r];
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                Simplex f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                d(r, *index_of(f)) += (i % 2 == 0) ? 1 : -1;
            }
        }
        return d;
    }

    /// True when the vertex map sends every simplex onto a simplex.
    bool is_simplicial(const std::vector<std::size_t>& vmap) const
    {
        if (vmap.size() != vertices_.size())
            return false;
        for (auto v : vmap)
            if (v >= vertices_.size())
                return false;
        for (const auto& dim : by_dim_)
            for (const auto& s : dim)
                if (!contains(image(vmap, s)))
                    return false;
        return true;
    }

    /// Sorted, deduplicated image of a simplex.
    static Simplex image(const std::vector<std::size_t>& vmap, const Simplex& s)
    {
        Simplex t;
        for (auto v : s)
            t.push_back(vmap[v]);
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        return t;
    }

    /// Pullback σ^# on integer n-cochains; degenerate images give 0, order reversal gives a sign.
    IntMatrix pullback(const std::vector<std::size_t>& vmap, std::size_t n) const
    {
        if (!is_simplicial(vmap))
            throw InvalidInput("vertex map is not simplicial");
        IntMatrix P(count(n), count(n));
        for (std::size_t r = 0; r < count(n); ++r)
        {
            const Simplex& s = by_dim_[n][r];
            std::vector<std::size_t> img;
            for (auto v : s)
                img.push_back(vmap[v]);
            Simplex sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                continue;
            // sign of the permutation sorting img
            int sign = 1;
            for (std::size_t i = 0; i < img.size(); ++i)
                for (std::size_t j = i + 1; j < img.size(); ++j)
                    if (img[i] > img[j])
                        sign = -sign;
            P(r, *index_of(sorted)) = sign;
        }
        return P;
    }

private:
    void add_faces(const Simplex& s, std::set<Simplex>& out, bool require_closed, const std::set<Simplex>& given)
    {
        if (s.size() <= 1)
            return;
        for (std::size_t i = 0; i < s.size(); ++i)
        {
            Simplex f = s;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            if (require_closed && !given.count(f))
                throw InvalidInput("SimplicialComplex: simplex list is not closed under faces");
            if (out.insert(f).second || require_closed)
                add_faces(f, out, require_closed, given);
        }
    }

    std::vector<std::string> vertices_;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Integer cochain complex of X tensored with A, levels A^{#simplices} in canonical form.
struct CoefficientCochains
{
    CochainComplex complex;
    std::vector<DirectSum> sums; // concatenated (simplex-major) <-> canonical
};

/// Conjugate an integer matrix on concatenated A-coordinates into canonical coordinates.
inline GroupHom concat_hom(const DirectSum& s, const DirectSum& t, const IntMatrix& concat)
{
    return hom_between_sums(s, t, concat);
}

inline CoefficientCochains cochains_with_sums(const SimplicialComplex& X, const FgAbGroup& A)
{
    CoefficientCochains cc;
    const std::size_t top = X.dimension() + 1;
    std::vector<FgAbGroup> levels;
    for (std::size_t n = 0; n < top; ++n)
    {
        cc.sums.push_back(direct_sum(std::vector<FgAbGroup>(X.count(n), A)));
        levels.push_back(cc.sums.back().group);
    }
    std::vector<GroupHom> diffs;
    const IntMatrix IA = IntMatrix::identity(A.dim());
    for (std::size_t n = 0; n + 1 < top; ++n)
        diffs.push_back(concat_hom(cc.sums[n], cc.sums[n + 1], IntMatrix::kronecker(X.coboundary(n), IA)));
    cc.complex = CochainComplex(levels, diffs);
    return cc;
}

/// C^*(X; A)
inline CochainComplex cochain_complex(const SimplicialComplex& X, const FgAbGroup& A)
{
    return cochains_with_sums(X, A).complex;
}

/// A self-map of X: a simplicial vertex map or an explicit chain self-map on integer cochains.
struct SelfMapSpec
{
    std::optional<std::vector<std::size_t>> vertex_map;
    std::optional<std::vector<IntMatrix>> chain_selfmap;

    static SelfMapSpec vertices(std::vector<std::size_t> v) { return {std::move(v), std::nullopt}; }
    static SelfMapSpec chain(std::vector<IntMatrix> m) { return {std::nullopt, std::move(m)}; }
    static SelfMapSpec identity(const SimplicialComplex& X)
    {
        std::vector<std::size_t> v(X.vertices().size());
        std::iota(v.begin(), v.end(), std::size_t{0});
        return vertices(v);
    }

    /// Integer matrices of σ^# in each degree, validated against the coboundary.
    std::vector<IntMatrix> integer_pullback(const SimplicialComplex& X) const
    {
        std::vector<IntMatrix> P;
        const std::size_t top = X.dimension() + 1;
        if (vertex_map)
        {
            for (std::size_t n = 0; n < top; ++n)
                P.push_back(X.pullback(*vertex_map, n));
            return P;
        }
        if (!chain_selfmap)
            throw InvalidInput("SelfMapSpec: neither vertex_map nor chain_selfmap given");
        P = *chain_selfmap;
        if (P.size() != top)
            throw InvalidInput("chain_selfmap: need one matrix per degree 0.." + std::to_string(top - 1));
        for (std::size_t n = 0; n < top; ++n)
            if (P[n].rows() != X.count(n) || P[n].cols() != X.count(n))
                throw InvalidInput("chain_selfmap: matrix " + std::to_string(n) + " has wrong shape");
        for (std::size_t n = 0; n + 1 < top; ++n)
            if (!(P[n + 1] * X.coboundary(n) == X.coboundary(n) * P[n]))
                throw InvalidInput("chain_selfmap: does not commute with the coboundary at degree " + std::to_string(n));
        return P;
    }
};

/**
 * Chain self-map of the n-gon's cochains inducing identity on H^0 and ×d on H^1.
 * f^1 = I + (d-1)·e_{[0,1]}·ψ^T, with ψ the fundamental cycle (loop sum).
 */
inline SelfMapSpec circle_degree_map(std::size_t n, long long d)
{
    SimplicialComplex X = SimplicialComplex::polygon(n);
    IntMatrix f0 = IntMatrix::identity(n);
    IntMatrix f1 = IntMatrix::identity(n);
    IntVector psi(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        psi[*X.index_of({i, i + 1})] = 1;
    psi[*X.index_of({0, n - 1})] = -1;
    const std::size_t e01 = *X.index_of({0, 1});
    for (std::size_t j = 0; j < n; ++j)
        f1(e01, j) += Integer(d - 1) * psi[j];
    return SelfMapSpec::chain({f0, f1});
}

/// The two-row bicomplex with rows C^*(X; A) and vertical id - f∘σ^#.
struct SimplicialDifferenceModel
{
    CoefficientCochains cochains;
    TwoRowBicomplex bicomplex;
};

inline SimplicialDifferenceModel difference_model(const SimplicialComplex& X, const SelfMapSpec& sigma, const SigmaModule& coeff)
{
    SimplicialDifferenceModel m;
    m.cochains = cochains_with_sums(X, coeff.carrier());
    const CochainComplex& C = m.cochains.complex;
    std::vector<IntMatrix> P = sigma.integer_pullback(X);
    std::vector<GroupHom> comps;
    for (std::size_t n = 0; n < C.length(); ++n)
    {
        const DirectSum& s = m.cochains.sums[n];
        GroupHom fs = concat_hom(s, s, IntMatrix::kronecker(P[n], coeff.endo().matrix()));
        comps.push_back(GroupHom::identity(C.level(n)) - fs);
    }
    m.bicomplex = TwoRowBicomplex(ChainMap(C, C, comps));
    return m;
}

/// H^*_σ(X; (A, f)) as cohomology of the total complex.
inline std::vector<FgAbGroup> difference_cohomology(const SimplicialComplex& X, const SelfMapSpec& sigma, const SigmaModule& coeff)
{
    return total_cohomology(difference_model(X, sigma, coeff).bicomplex);
}

inline std::vector<SesReport> difference_ses_report(const SimplicialComplex& X, const SelfMapSpec& sigma, const SigmaModule& coeff)
{
    return extract_ses(difference_model(X, sigma, coeff).bicomplex);
}

} // namespace diffcoh

#endif // DIFFCOH_SIMPLICIAL_HPP
