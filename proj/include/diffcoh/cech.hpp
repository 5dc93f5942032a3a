/**
 * Difference Čech cohomology.
 *
 * Abelian part: a bicomplex with rows Č(U), Č(V) joined by res - σ̌.
 *
 * Combinatorial covers: a finite simplicial complex is treated as its face
 * poset with the Alexandrov topology (open = upward closed).  U is the cover
 * by open vertex stars, V is the cover {st(i) ∩ σ^-1 st(j)}; res is the
 * refinement (i, j) -> i and σ̌ pulls back along σ over (i, j) -> j.  Sections
 * of a constant sheaf on an open set are functions on its connected
 * components.
 */
#ifndef DIFFCOH_CECH_HPP
#define DIFFCOH_CECH_HPP

#include <map>
#include <string>
#include <vector>

#include "simplicial.hpp"

namespace diffcoh
{

/// Čech rows, the refinement map and the σ-structure map.
struct CoverPresheafData
{
    CochainComplex nerve_U;
    CochainComplex nerve_V;
    ChainMap res;
    ChainMap sigma_check;

    CoverPresheafData() = default;
    CoverPresheafData(CochainComplex u, CochainComplex v, ChainMap r, ChainMap s)
        : nerve_U(std::move(u)), nerve_V(std::move(v)), res(std::move(r)), sigma_check(std::move(s))
    {
        if (!(res.source().levels() == nerve_U.levels()) || !(res.target().levels() == nerve_V.levels()) ||
            !(sigma_check.source().levels() == nerve_U.levels()) || !(sigma_check.target().levels() == nerve_V.levels()))
            throw InvalidInput("CoverPresheafData: res/sigma_check must map nerve_U to nerve_V");
    }

    TwoRowBicomplex bicomplex() const { return TwoRowBicomplex(res - sigma_check); }
};

inline std::vector<FgAbGroup> difference_cech_cohomology(const CoverPresheafData& data)
{
    return total_cohomology(data.bicomplex());
}

/// (c^{n-1}, c^n) in canonical coordinates of V^{n-1} and U^n is a total cocycle.
inline bool cocycle_check(std::size_t n, const IntVector& c_prev, const IntVector& c_n, const CoverPresheafData& data)
{
    TotalComplex T = total_complex(data.bicomplex());
    if (n >= T.complex.length())
        return true;
    return T.complex.is_cocycle(n, T.embed(n, c_prev, c_n));
}

/// One cell of a nerve: an increasing tuple of cover indices with its components.
struct NerveCell
{
    std::vector<std::size_t> tuple;
    std::vector<std::size_t> members;             // simplex ids in the intersection
    std::vector<std::size_t> comp_of;             // per member, component index
    std::size_t components = 0;
    std::vector<std::size_t> comp_rep;            // a member simplex id per component

    std::size_t component_of(std::size_t simplex_id) const
    {
        auto it = std::lower_bound(members.begin(), members.end(), simplex_id);
        if (it == members.end() || *it != simplex_id)
            throw InvalidInput("NerveCell: simplex not in cell");
        return comp_of[static_cast<std::size_t>(it - members.begin())];
    }
};

struct Nerve
{
    std::vector<std::vector<NerveCell>> levels;
    std::vector<std::size_t> offsets_of(std::size_t p) const
    {
        std::vector<std::size_t> off;
        std::size_t acc = 0;
        for (const auto& c : levels[p])
        {
            off.push_back(acc);
            acc += c.components;
        }
        off.push_back(acc);
        return off;
    }
    std::size_t total_components(std::size_t p) const { return p < levels.size() ? offsets_of(p).back() : 0; }
    std::size_t find(std::size_t p, const std::vector<std::size_t>& tuple) const
    {
        const auto& L = levels.at(p);
        for (std::size_t k = 0; k < L.size(); ++k)
            if (L[k].tuple == tuple)
                return k;
        throw InvalidInput("Nerve: missing cell");
    }
};

/// Signed reordering of a tuple of cover indices; sign 0 when an index repeats.
inline int sort_with_sign(std::vector<std::size_t>& t)
{
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
            if (t[j] > t[j + 1])
            {
                std::swap(t[j], t[j + 1]);
                sign = -sign;
            }
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
        return 0;
    return sign;
}

class CombinatorialCover
{
public:
    CombinatorialCover(SimplicialComplex X, std::vector<std::size_t> vmap, std::size_t max_level = 16)
        : X_(std::move(X)), vmap_(std::move(vmap))
    {
        if (!X_.is_simplicial(vmap_))
            throw InvalidInput("CombinatorialCover: vertex map is not simplicial");
        simplices_ = X_.all_simplices();
        for (std::size_t k = 0; k < simplices_.size(); ++k)
            id_[simplices_[k]] = k;
        const std::size_t nv = X_.vertices().size();
        for (std::size_t i = 0; i < nv; ++i)
            U_sets_.push_back(star(i));
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = 0; j < nv; ++j)
            {
                std::vector<std::size_t> s;
                for (std::size_t id : U_sets_[i])
                {
                    const Simplex img = SimplicialComplex::image(vmap_, simplices_[id]);
                    if (std::binary_search(img.begin(), img.end(), j))
                        s.push_back(id);
                }
                if (!s.empty())
                {
                    V_sets_.push_back(s);
                    V_labels_.push_back({i, j});
                }
            }
        U_ = build_nerve(U_sets_, max_level);
        V_ = build_nerve(V_sets_, max_level);
    }

    const SimplicialComplex& space() const noexcept { return X_; }
    const std::vector<std::size_t>& vertex_map() const noexcept { return vmap_; }
    const Nerve& U() const noexcept { return U_; }
    const Nerve& V() const noexcept { return V_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& V_labels() const noexcept { return V_labels_; }
    std::size_t simplex_id(const Simplex& s) const { return id_.at(s); }
    const Simplex& simplex(std::size_t id) const { return simplices_[id]; }
    std::size_t sigma_id(std::size_t id) const { return id_.at(SimplicialComplex::image(vmap_, simplices_[id])); }

    /// Integer Čech coboundary of a nerve at level p over component coordinates.
    IntMatrix coboundary(const Nerve& N, std::size_t p) const
    {
        auto so = N.offsets_of(p);
        const std::size_t rows = N.total_components(p + 1);
        IntMatrix d(rows, so.back());
        if (p + 1 >= N.levels.size())
            return d;
        auto to = N.offsets_of(p + 1);
        for (std::size_t c = 0; c < N.levels[p + 1].size(); ++c)
        {
            const NerveCell& cell = N.levels[p + 1][c];
            for (std::size_t k = 0; k < cell.tuple.size(); ++k)
            {
                std::vector<std::size_t> face = cell.tuple;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                const std::size_t f = N.find(p, face);
                for (std::size_t comp = 0; comp < cell.components; ++comp)
                {
                    std::size_t fc = N.levels[p][f].component_of(cell.comp_rep[comp]);
                    d(to[c] + comp, so[f] + fc) += (k % 2 == 0) ? 1 : -1;
                }
            }
        }
        return d;
    }

    /// Integer matrix of the map Č^p(U) -> Č^p(V) along (i, j) -> i (use_target = false) or -> j with σ pullback.
    IntMatrix refinement(std::size_t p, bool use_target) const
    {
        IntMatrix R(V_.total_components(p), U_.total_components(p));
        if (p >= V_.levels.size())
            return R;
        auto vo = V_.offsets_of(p);
        auto uo = U_.offsets_of(p);
        for (std::size_t c = 0; c < V_.levels[p].size(); ++c)
        {
            const NerveCell& cell = V_.levels[p][c];
            std::vector<std::size_t> t;
            for (auto x : cell.tuple)
                t.push_back(use_target ? V_labels_[x].second : V_labels_[x].first);
            const int sign = sort_with_sign(t);
            if (sign == 0)
                continue;
            const std::size_t u = U_.find(p, t);
            for (std::size_t comp = 0; comp < cell.components; ++comp)
            {
                std::size_t sid = cell.comp_rep[comp];
                if (use_target)
                    sid = sigma_id(sid);
                R(vo[c] + comp, uo[u] + U_.levels[p][u].component_of(sid)) += sign;
            }
        }
        return R;
    }

private:
    std::vector<std::size_t> star(std::size_t v) const
    {
        std::vector<std::size_t> s;
        for (std::size_t k = 0; k < simplices_.size(); ++k)
            if (std::binary_search(simplices_[k].begin(), simplices_[k].end(), v))
                s.push_back(k);
        return s;
    }

    NerveCell make_cell(std::vector<std::size_t> tuple, std::vector<std::size_t> members) const
    {
        NerveCell c;
        c.tuple = std::move(tuple);
        c.members = std::move(members);
        DisjointSets ds(c.members.size());
        for (std::size_t a = 0; a < c.members.size(); ++a)
        {
            const Simplex& s = simplices_[c.members[a]];
            if (s.size() < 2)
                continue;
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                Simplex f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                auto it = std::lower_bound(c.members.begin(), c.members.end(), id_.at(f));
                if (it != c.members.end() && *it == id_.at(f))
                    ds.unite(a, static_cast<std::size_t>(it - c.members.begin()));
            }
        }
        auto cls = ds.classes();
        c.components = cls.size();
        c.comp_of.assign(c.members.size(), 0);
        for (std::size_t k = 0; k < cls.size(); ++k)
        {
            c.comp_rep.push_back(c.members[cls[k].front()]);
            for (auto m : cls[k])
                c.comp_of[m] = k;
        }
        return c;
    }

    Nerve build_nerve(const std::vector<std::vector<std::size_t>>& sets, std::size_t max_level) const
    {
        Nerve N;
        std::vector<NerveCell> cur;
        for (std::size_t i = 0; i < sets.size(); ++i)
            cur.push_back(make_cell({i}, sets[i]));
        while (!cur.empty() && N.levels.size() <= max_level)
        {
            N.levels.push_back(cur);
            std::vector<NerveCell> next;
            for (const auto& cell : cur)
                for (std::size_t j = cell.tuple.back() + 1; j < sets.size(); ++j)
                {
                    std::vector<std::size_t> m;
                    std::set_intersection(cell.members.begin(), cell.members.end(), sets[j].begin(), sets[j].end(),
                                          std::back_inserter(m));
                    if (m.empty())
                        continue;
                    auto t = cell.tuple;
                    t.push_back(j);
                    next.push_back(make_cell(t, m));
                }
            cur = std::move(next);
        }
        return N;
    }

    SimplicialComplex X_;
    std::vector<std::size_t> vmap_;
    std::vector<Simplex> simplices_;
    std::map<Simplex, std::size_t> id_;
    std::vector<std::vector<std::size_t>> U_sets_;
    std::vector<std::vector<std::size_t>> V_sets_;
    std::vector<std::pair<std::size_t, std::size_t>> V_labels_;
    Nerve U_;
    Nerve V_;
};

/// Abelian Čech data of a constant sheaf (A, f) on a combinatorial cover, with coordinate bookkeeping.
struct CechModel
{
    CoverPresheafData data;
    std::vector<DirectSum> U_sums;
    std::vector<DirectSum> V_sums;
};

inline CechModel cech_model(const CombinatorialCover& cov, const SigmaModule& coeff)
{
    const FgAbGroup& A = coeff.carrier();
    const IntMatrix IA = IntMatrix::identity(A.dim());
    auto build = [&](const Nerve& N, std::vector<DirectSum>& sums) {
        std::vector<FgAbGroup> levels;
        for (std::size_t p = 0; p < N.levels.size(); ++p)
        {
            sums.push_back(direct_sum(std::vector<FgAbGroup>(N.total_components(p), A)));
            levels.push_back(sums.back().group);
        }
        std::vector<GroupHom> d;
        for (std::size_t p = 0; p + 1 < N.levels.size(); ++p)
            d.push_back(hom_between_sums(sums[p], sums[p + 1], IntMatrix::kronecker(cov.coboundary(N, p), IA)));
        return CochainComplex(levels, d);
    };
    CechModel m;
    CochainComplex U = build(cov.U(), m.U_sums);
    CochainComplex V = build(cov.V(), m.V_sums);
    std::vector<GroupHom> res, sig;
    for (std::size_t p = 0; p < std::max(U.length(), V.length()); ++p)
    {
        if (p >= U.length() || p >= V.length())
        {
            res.push_back(GroupHom::zero(U.level(p), V.level(p)));
            sig.push_back(GroupHom::zero(U.level(p), V.level(p)));
            continue;
        }
        res.push_back(hom_between_sums(m.U_sums[p], m.V_sums[p], IntMatrix::kronecker(cov.refinement(p, false), IA)));
        sig.push_back(hom_between_sums(m.U_sums[p], m.V_sums[p],
                                       IntMatrix::kronecker(cov.refinement(p, true), coeff.endo().matrix())));
    }
    m.data = CoverPresheafData(U, V, ChainMap(U, V, res), ChainMap(U, V, sig));
    return m;
}

struct ComparisonReport
{
    std::vector<FgAbGroup> cech;    // degrees 0, 1
    std::vector<FgAbGroup> derived; // degrees 0, 1
    bool match = false;
};

/// Degree 0 and 1 of Čech difference cohomology against the simplicial model.
inline ComparisonReport cech_to_derived_check(const CoverPresheafData& data, const std::vector<FgAbGroup>& model)
{
    ComparisonReport r;
    TotalComplex T = total_complex(data.bicomplex());
    for (std::size_t n = 0; n < 2; ++n)
    {
        r.cech.push_back(T.complex.cohomology_at(n).group());
        r.derived.push_back(n < model.size() ? model[n] : FgAbGroup());
    }
    r.match = r.cech == r.derived;
    return r;
}

} // namespace diffcoh

#endif // DIFFCOH_CECH_HPP
