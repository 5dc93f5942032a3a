/**
 * Nonabelian first difference Čech cohomology of a constant sheaf of finite
 * groups (G, s) on a combinatorial cover, by exhaustive enumeration.
 *
 * A class is represented by (c0, c1) with c0 a 0-cochain on V and c1 a
 * 1-cochain on U such that
 *   c1 is a Čech cocycle:        c_ab · c_bc = c_ac
 *   the twisted relation holds:   res(c1)_xy = c0_x^-1 · σ̌(c1)_xy · c0_y
 * and a 0-cochain f on U acts by
 *   c1_ab -> f_a^-1 · c1_ab · f_b,   c0_x -> σ̌(f)_x^-1 · c0_x · res(f)_x.
 * For abelian G this is exactly H^1 of the total complex of the abelian
 * bicomplex with vertical res - σ̌.
 */
#ifndef DIFFCOH_NONABELIAN_CECH_HPP
#define DIFFCOH_NONABELIAN_CECH_HPP

#include <array>
#include <cmath>
#include <unordered_map>

#include "cech.hpp"

namespace diffcoh
{

/// Where a component of a 1-cell of V lands in U along one of the two refinements.
struct OrientedComponent
{
    bool degenerate = false; // both indices equal: value is the identity
    bool reversed = false;   // tuple was decreasing: value is inverted
    std::size_t position = 0; // flat component index in the U level-1 cochain
};

/// Flattened incidence data of a cover for nonabelian cochains.
struct NonabelianCechData
{
    FiniteSigmaGroup group;
    std::size_t U0 = 0, U1 = 0, V0 = 0; // number of component slots per level
    // level-1 U component -> (slot in U0 of first index, slot of second index)
    std::vector<std::pair<std::size_t, std::size_t>> U1_faces;
    // level-2 U component -> slots (ab, bc, ac) in U1
    std::vector<std::array<std::size_t, 3>> U2_faces;
    // level-0 V component -> U0 slot along res, U0 slot along σ
    std::vector<std::size_t> V0_res, V0_sig;
    // level-1 V component -> V0 slots (x, y), and its images in U1
    std::vector<std::pair<std::size_t, std::size_t>> V1_faces;
    std::vector<OrientedComponent> V1_res, V1_sig;

    static NonabelianCechData from_cover(const CombinatorialCover& cov, FiniteSigmaGroup G)
    {
        NonabelianCechData d;
        d.group = std::move(G);
        const Nerve& U = cov.U();
        const Nerve& V = cov.V();
        auto lvl = [](const Nerve& N, std::size_t p) -> const std::vector<NerveCell>& {
            static const std::vector<NerveCell> none;
            return p < N.levels.size() ? N.levels[p] : none;
        };
        auto off = [](const Nerve& N, std::size_t p) {
            return p < N.levels.size() ? N.offsets_of(p) : std::vector<std::size_t>{0};
        };
        auto u0 = off(U, 0), u1 = off(U, 1), v0 = off(V, 0);
        d.U0 = u0.back();
        d.U1 = u1.back();
        d.V0 = v0.back();
        auto slot = [&](const Nerve& N, const std::vector<std::size_t>& offs, std::size_t p,
                        const std::vector<std::size_t>& tuple, std::size_t simplex) {
            std::size_t c = N.find(p, tuple);
            return offs[c] + N.levels[p][c].component_of(simplex);
        };
        for (const auto& cell : lvl(U, 1))
            for (std::size_t k = 0; k < cell.components; ++k)
            {
                std::size_t s = cell.comp_rep[k];
                d.U1_faces.push_back({slot(U, u0, 0, {cell.tuple[0]}, s), slot(U, u0, 0, {cell.tuple[1]}, s)});
            }
        for (const auto& cell : lvl(U, 2))
            for (std::size_t k = 0; k < cell.components; ++k)
            {
                std::size_t s = cell.comp_rep[k];
                const auto& t = cell.tuple;
                d.U2_faces.push_back({slot(U, u1, 1, {t[0], t[1]}, s), slot(U, u1, 1, {t[1], t[2]}, s),
                                      slot(U, u1, 1, {t[0], t[2]}, s)});
            }
        const auto& labels = cov.V_labels();
        for (const auto& cell : lvl(V, 0))
            for (std::size_t k = 0; k < cell.components; ++k)
            {
                std::size_t s = cell.comp_rep[k];
                auto [i, j] = labels[cell.tuple[0]];
                d.V0_res.push_back(slot(U, u0, 0, {i}, s));
                d.V0_sig.push_back(slot(U, u0, 0, {j}, cov.sigma_id(s)));
            }
        auto orient = [&](std::size_t a, std::size_t b, std::size_t simplex) {
            OrientedComponent o;
            if (a == b)
            {
                o.degenerate = true;
                return o;
            }
            o.reversed = a > b;
            o.position = slot(U, u1, 1, {std::min(a, b), std::max(a, b)}, simplex);
            return o;
        };
        for (const auto& cell : lvl(V, 1))
            for (std::size_t k = 0; k < cell.components; ++k)
            {
                std::size_t s = cell.comp_rep[k];
                const auto& t = cell.tuple;
                d.V1_faces.push_back({slot(V, v0, 0, {t[0]}, s), slot(V, v0, 0, {t[1]}, s)});
                d.V1_res.push_back(orient(labels[t[0]].first, labels[t[1]].first, s));
                d.V1_sig.push_back(orient(labels[t[0]].second, labels[t[1]].second, cov.sigma_id(s)));
            }
        return d;
    }
};

struct NonabelianClass
{
    std::vector<std::size_t> c0; // group element indices on V0 slots
    std::vector<std::size_t> c1; // group element indices on U1 slots
    std::size_t size = 0;        // number of cocycles in the class
};

struct NonabelianH1
{
    std::vector<NonabelianClass> classes; // the class of (1, 1) first
    std::size_t cocycles = 0;
    std::size_t relation_checks = 0;
};

namespace detail
{

inline std::size_t oriented_value(const FiniteSigmaGroup& G, const OrientedComponent& o, const std::vector<std::size_t>& c1)
{
    if (o.degenerate)
        return G.identity();
    return o.reversed ? G.inv(c1[o.position]) : c1[o.position];
}

inline std::string key_of(const std::vector<std::size_t>& c0, const std::vector<std::size_t>& c1)
{
    std::string k;
    k.reserve(2 * (c0.size() + c1.size()));
    for (auto v : c0)
        k.append({static_cast<char>(v & 0xff), static_cast<char>(v >> 8)});
    for (auto v : c1)
        k.append({static_cast<char>(v & 0xff), static_cast<char>(v >> 8)});
    return k;
}

} // namespace detail

/// Enumerate all twisted cocycles and their orbits under 0-cochains on U.
inline NonabelianH1 nonabelian_h1(const NonabelianCechData& d, double bound = 1e7)
{
    const FiniteSigmaGroup& G = d.group;
    const std::size_t q = G.order();
    if (q > 65536)
        throw BoundExceeded("nonabelian_h1: group too large", static_cast<double>(q));
    const double c1_space = std::pow(static_cast<double>(q), static_cast<double>(d.U1));
    if (c1_space > bound)
        throw BoundExceeded("nonabelian_h1: 1-cochain space exceeds the enumeration bound", c1_space);

    // c0 solutions for fixed c1: propagate along V1 edges from one root per connected block
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(d.V0); // (edge, other end)
    for (std::size_t e = 0; e < d.V1_faces.size(); ++e)
    {
        adj[d.V1_faces[e].first].push_back({e, d.V1_faces[e].second});
        adj[d.V1_faces[e].second].push_back({e, d.V1_faces[e].first});
    }
    std::vector<std::size_t> block(d.V0, SIZE_MAX);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t v = 0; v < d.V0; ++v)
    {
        if (block[v] != SIZE_MAX)
            continue;
        std::vector<std::size_t> order{v};
        block[v] = blocks.size();
        for (std::size_t k = 0; k < order.size(); ++k)
            for (auto [e, w] : adj[order[k]])
                if (block[w] == SIZE_MAX)
                {
                    block[w] = blocks.size();
                    order.push_back(w);
                }
        blocks.push_back(order);
    }

    std::vector<std::vector<std::size_t>> all_c0, all_c1;
    std::vector<std::size_t> c1(d.U1, G.identity());
    std::vector<std::size_t> gidx(d.U1, 0); // odometer over element indices
    double produced = 0;
    for (;;)
    {
        for (std::size_t k = 0; k < d.U1; ++k)
            c1[k] = gidx[k];
        bool cocycle = true;
        for (const auto& f : d.U2_faces)
            if (G.mul(c1[f[0]], c1[f[1]]) != c1[f[2]])
            {
                cocycle = false;
                break;
            }
        if (cocycle)
        {
            // per edge: c0_y = σ̌c^-1 · c0_x · res c  (x = first face)
            std::vector<std::size_t> rv(d.V1_faces.size()), sv(d.V1_faces.size());
            for (std::size_t e = 0; e < rv.size(); ++e)
            {
                rv[e] = detail::oriented_value(G, d.V1_res[e], c1);
                sv[e] = G.s(detail::oriented_value(G, d.V1_sig[e], c1));
            }
            std::vector<std::vector<std::vector<std::size_t>>> per_block; // valid fillings per block
            bool any = true;
            for (const auto& blk : blocks)
            {
                std::vector<std::vector<std::size_t>> fills;
                for (std::size_t g = 0; g < q; ++g)
                {
                    std::vector<std::size_t> val(d.V0, SIZE_MAX);
                    val[blk[0]] = g;
                    bool ok = true;
                    for (std::size_t k = 0; k < blk.size() && ok; ++k)
                    {
                        const std::size_t x = blk[k];
                        for (auto [e, w] : adj[x])
                        {
                            const bool forward = d.V1_faces[e].first == x;
                            std::size_t want = forward ? G.mul(G.mul(G.inv(sv[e]), val[x]), rv[e])
                                                       : G.mul(G.mul(sv[e], val[x]), G.inv(rv[e]));
                            if (val[w] == SIZE_MAX)
                                val[w] = want;
                            else if (val[w] != want)
                            {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if (ok)
                    {
                        std::vector<std::size_t> f;
                        for (auto x : blk)
                            f.push_back(val[x]);
                        fills.push_back(f);
                    }
                }
                if (fills.empty())
                {
                    any = false;
                    break;
                }
                per_block.push_back(std::move(fills));
            }
            if (any)
            {
                std::vector<std::size_t> pick(blocks.size(), 0);
                for (;;)
                {
                    std::vector<std::size_t> c0(d.V0);
                    for (std::size_t b = 0; b < blocks.size(); ++b)
                        for (std::size_t k = 0; k < blocks[b].size(); ++k)
                            c0[blocks[b][k]] = per_block[b][pick[b]][k];
                    all_c0.push_back(std::move(c0));
                    all_c1.push_back(c1);
                    if (++produced > bound)
                        throw BoundExceeded("nonabelian_h1: cocycle count exceeds the enumeration bound", produced);
                    std::size_t b = 0;
                    for (; b < blocks.size(); ++b)
                    {
                        if (++pick[b] < per_block[b].size())
                            break;
                        pick[b] = 0;
                    }
                    if (b == blocks.size())
                        break;
                }
            }
        }
        std::size_t k = 0;
        for (; k < d.U1; ++k)
        {
            if (++gidx[k] < q)
                break;
            gidx[k] = 0;
        }
        if (k == d.U1)
            break;
    }

    const std::size_t n = all_c0.size();
    const double checks = static_cast<double>(n) * static_cast<double>(d.U0) * static_cast<double>(G.generators().size());
    if (checks > bound)
        throw BoundExceeded("nonabelian_h1: relation checks exceed the enumeration bound", checks);
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(detail::key_of(all_c0[i], all_c1[i]), i);

    NonabelianH1 out;
    out.cocycles = n;
    DisjointSets ds(n);
    for (std::size_t slot = 0; slot < d.U0; ++slot)
        for (std::size_t g : G.generators())
            for (std::size_t i = 0; i < n; ++i)
            {
                auto fval = [&](std::size_t s) { return s == slot ? g : G.identity(); };
                std::vector<std::size_t> e1(d.U1), e0(d.V0);
                for (std::size_t k = 0; k < d.U1; ++k)
                    e1[k] = G.mul(G.mul(G.inv(fval(d.U1_faces[k].first)), all_c1[i][k]), fval(d.U1_faces[k].second));
                for (std::size_t x = 0; x < d.V0; ++x)
                    e0[x] = G.mul(G.mul(G.inv(G.s(fval(d.V0_sig[x]))), all_c0[i][x]), fval(d.V0_res[x]));
                auto it = index.find(detail::key_of(e0, e1));
                if (it == index.end())
                    throw CheckFailed("nonabelian_h1: action left the cocycle set");
                ds.unite(i, it->second);
                ++out.relation_checks;
            }
    auto cls = ds.classes();
    std::size_t trivial = SIZE_MAX;
    for (std::size_t i = 0; i < n && trivial == SIZE_MAX; ++i)
        if (std::all_of(all_c0[i].begin(), all_c0[i].end(), [&](std::size_t v) { return v == G.identity(); }) &&
            std::all_of(all_c1[i].begin(), all_c1[i].end(), [&](std::size_t v) { return v == G.identity(); }))
            trivial = i;
    for (const auto& c : cls)
    {
        NonabelianClass k;
        k.c0 = all_c0[c.front()];
        k.c1 = all_c1[c.front()];
        k.size = c.size();
        if (std::binary_search(c.begin(), c.end(), trivial))
        {
            k.c0 = all_c0[trivial];
            k.c1 = all_c1[trivial];
            out.classes.insert(out.classes.begin(), k);
        }
        else
            out.classes.push_back(k);
    }
    return out;
}

} // namespace diffcoh

#endif // DIFFCOH_NONABELIAN_CECH_HPP
