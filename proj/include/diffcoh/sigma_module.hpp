/**
 * Abelian groups with an endomorphism (Z[x]-modules) and finite, possibly
 * nonabelian, groups with an endomorphism.
 *
 * For an abelian group the Artin-Schreier set is the cokernel of (s - id);
 * for a finite group it is the orbit set of g.x = s(g) x g^-1.
 */
#ifndef DIFFCOH_SIGMA_MODULE_HPP
#define DIFFCOH_SIGMA_MODULE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "abelian_group.hpp"

namespace diffcoh
{

class SigmaModule
{
public:
    SigmaModule() = default;
    SigmaModule(FgAbGroup carrier, GroupHom endo) : carrier_(std::move(carrier)), endo_(std::move(endo))
    {
        if (!(endo_.source() == carrier_) || !(endo_.target() == carrier_))
            throw InvalidInput("SigmaModule: endomorphism must map the carrier to itself");
    }
    SigmaModule(const FgAbGroup& carrier, const IntMatrix& endo) : SigmaModule(carrier, GroupHom(carrier, carrier, endo)) {}

    /// (Z/n or Z, multiplication by k)
    static SigmaModule cyclic(const Integer& n, const Integer& k)
    {
        FgAbGroup g = FgAbGroup::cyclic(n);
        return SigmaModule(g, GroupHom::scalar(g, k));
    }

    const FgAbGroup& carrier() const noexcept { return carrier_; }
    const GroupHom& endo() const noexcept { return endo_; }

    /// endo - id
    GroupHom twisted_difference() const { return endo_ - GroupHom::identity(carrier_); }

private:
    FgAbGroup carrier_;
    GroupHom endo_;
};

/// ker(endo - id) with its inclusion.
inline GroupWithMap invariants_with_map(const SigmaModule& M) { return kernel(M.twisted_difference()); }
inline FgAbGroup invariants(const SigmaModule& M) { return invariants_with_map(M).group; }

/// coker(endo - id) with its projection; the Artin-Schreier group AS(M, s).
inline GroupWithMap coinvariants_with_map(const SigmaModule& M) { return coker_of_hom(M.twisted_difference()); }
inline FgAbGroup coinvariants(const SigmaModule& M) { return coinvariants_with_map(M).group; }

/// [H^0, H^1] of the two-term complex M --(endo - id)--> M; higher groups vanish.
inline std::vector<FgAbGroup> point_difference_cohomology(const SigmaModule& M)
{
    return {invariants(M), coinvariants(M)};
}

/// Union-find with path halving; merges keep the smaller root.
class DisjointSets
{
public:
    explicit DisjointSets(std::size_t n) : parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
        {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
        return true;
    }

    std::size_t size() const noexcept { return parent_.size(); }

    /// Classes sorted by least member; each class sorted.
    std::vector<std::vector<std::size_t>> classes()
    {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> slot(parent_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < parent_.size(); ++i)
        {
            std::size_t r = find(i);
            if (slot[r] == SIZE_MAX)
            {
                slot[r] = out.size();
                out.emplace_back();
            }
            out[slot[r]].push_back(i);
        }
        return out;
    }

private:
    std::vector<std::size_t> parent_;
};

/// A finite group given by its multiplication table, with an endomorphism.
class FiniteSigmaGroup
{
public:
    static constexpr std::size_t default_max_order = 5040;

    FiniteSigmaGroup() = default;

    FiniteSigmaGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table,
                     std::vector<std::size_t> endo, std::size_t max_order = default_max_order)
        : labels_(std::move(labels)), table_(std::move(table)), endo_(std::move(endo))
    {
        const std::size_t n = labels_.size();
        if (n == 0)
            throw InvalidInput("FiniteSigmaGroup: empty element list");
        if (n > max_order)
            throw BoundExceeded("FiniteSigmaGroup: order above the enumeration cap", static_cast<double>(n));
        if (table_.size() != n || endo_.size() != n)
            throw InvalidInput("FiniteSigmaGroup: table/endo size mismatch");
        for (const auto& row : table_)
        {
            if (row.size() != n)
                throw InvalidInput("FiniteSigmaGroup: table is not square");
            for (auto v : row)
                if (v >= n)
                    throw InvalidInput("FiniteSigmaGroup: table entry out of range");
        }
        for (auto v : endo_)
            if (v >= n)
                throw InvalidInput("FiniteSigmaGroup: endo entry out of range");
        check_group_law();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (endo_[mul(x, y)] != mul(endo_[x], endo_[y]))
                    throw InvalidInput("FiniteSigmaGroup: endo is not a homomorphism");
    }

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<std::size_t>& endo() const noexcept { return endo_; }
    const std::vector<std::size_t>& generators() const noexcept { return gens_; }

    std::size_t mul(std::size_t x, std::size_t y) const { return table_[x][y]; }
    std::size_t inv(std::size_t x) const { return inverse_[x]; }
    std::size_t s(std::size_t x) const { return endo_[x]; }

    bool is_abelian() const
    {
        for (std::size_t x = 0; x < order(); ++x)
            for (std::size_t y = x + 1; y < order(); ++y)
                if (mul(x, y) != mul(y, x))
                    return false;
        return true;
    }

    /// Same group with another endomorphism.
    FiniteSigmaGroup with_endo(std::vector<std::size_t> endo) const
    {
        return FiniteSigmaGroup(labels_, table_, std::move(endo), std::max(order(), default_max_order));
    }

    /// Orbits of g.x = s(g) x g^-1; the identity's orbit first, the rest by least member.
    std::vector<std::vector<std::size_t>> as_orbits() const
    {
        DisjointSets ds(order());
        for (std::size_t g : gens_)
            for (std::size_t x = 0; x < order(); ++x)
                ds.unite(x, mul(mul(s(g), x), inv(g)));
        auto cls = ds.classes();
        auto it = std::find_if(cls.begin(), cls.end(), [&](const auto& c) {
            return std::binary_search(c.begin(), c.end(), identity_);
        });
        std::rotate(cls.begin(), it, it + 1);
        return cls;
    }

private:
    void check_group_law()
    {
        const std::size_t n = order();
        identity_ = n;
        for (std::size_t e = 0; e < n && identity_ == n; ++e)
        {
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x)
                ok = table_[e][x] == x && table_[x][e] == x;
            if (ok)
                identity_ = e;
        }
        if (identity_ == n)
            throw InvalidInput("FiniteSigmaGroup: no identity element");
        inverse_.assign(n, n);
        for (std::size_t x = 0; x < n; ++x)
        {
            for (std::size_t y = 0; y < n; ++y)
                if (table_[x][y] == identity_ && table_[y][x] == identity_)
                {
                    inverse_[x] = y;
                    break;
                }
            if (inverse_[x] == n)
                throw InvalidInput("FiniteSigmaGroup: element without inverse");
        }
        // greedy generating set, then Light's associativity test on it
        std::vector<char> in(n, 0);
        std::vector<std::size_t> span{identity_};
        in[identity_] = 1;
        for (std::size_t g = 0; g < n; ++g)
        {
            if (in[g])
                continue;
            gens_.push_back(g);
            // closure of span under right multiplication by the generators
            std::vector<std::size_t> frontier = span;
            frontier.push_back(g);
            in[g] = 1;
            span.push_back(g);
            while (!frontier.empty())
            {
                std::vector<std::size_t> next;
                for (std::size_t x : frontier)
                    for (std::size_t h : gens_)
                    {
                        std::size_t y = table_[x][h];
                        if (!in[y])
                        {
                            in[y] = 1;
                            span.push_back(y);
                            next.push_back(y);
                        }
                    }
                frontier = std::move(next);
            }
        }
        for (std::size_t g : gens_)
            for (std::size_t x = 0; x < n; ++x)
            {
                const std::size_t xg = table_[x][g];
                for (std::size_t y = 0; y < n; ++y)
                    if (table_[xg][y] != table_[x][table_[g][y]])
                        throw InvalidInput("FiniteSigmaGroup: multiplication is not associative");
            }
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> endo_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> gens_;
};

/// Symmetric group on {0..n-1}; permutations in lexicographic order, (ab)(i) = a(b(i)).
inline FiniteSigmaGroup symmetric_group(std::size_t n)
{
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    const std::size_t N = perms.size();
    std::vector<std::vector<std::size_t>> table(N, std::vector<std::size_t>(N));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < N; ++a)
    {
        std::string l;
        for (auto v : perms[a])
            l += std::to_string(v);
        labels.push_back(l);
        for (std::size_t b = 0; b < N; ++b)
        {
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i)
                c[i] = perms[a][perms[b][i]];
            table[a][b] = index(c);
        }
    }
    std::vector<std::size_t> id(N);
    std::iota(id.begin(), id.end(), std::size_t{0});
    return FiniteSigmaGroup(labels, table, id, std::max(N, FiniteSigmaGroup::default_max_order));
}

/// The finite abelian group of M as a table; element i is M.carrier().element_at(i).
inline FiniteSigmaGroup to_finite_sigma_group(const SigmaModule& M)
{
    const FgAbGroup& G = M.carrier();
    const std::size_t n = G.order().convert_to<std::size_t>();
    std::vector<IntVector> elems = G.enumerate();
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::size_t> endo(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::string l = "(";
        for (std::size_t k = 0; k < elems[i].size(); ++k)
            l += (k ? "," : "") + elems[i][k].str();
        labels.push_back(l + ")");
        endo[i] = G.index_of(M.endo().apply(elems[i]));
        for (std::size_t j = 0; j < n; ++j)
        {
            IntVector s = elems[i];
            for (std::size_t k = 0; k < s.size(); ++k)
                s[k] += elems[j][k];
            table[i][j] = G.index_of(s);
        }
    }
    return FiniteSigmaGroup(labels, table, endo, std::max(n, FiniteSigmaGroup::default_max_order));
}

} // namespace diffcoh

#endif // DIFFCOH_SIGMA_MODULE_HPP
