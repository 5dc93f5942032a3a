/**
 * Bounded cochain complexes of finitely generated abelian groups, chain maps,
 * two-row bicomplexes and their total complexes, and the short exact sequence
 *
 *     0 -> coker H^{n-1}(v) -> H^n(Tot) -> ker H^n(v) -> 0
 *
 * read off a two-row bicomplex with vertical map v.
 */
#ifndef DIFFCOH_COMPLEX_HPP
#define DIFFCOH_COMPLEX_HPP

#include <map>
#include <vector>

#include "abelian_group.hpp"

namespace diffcoh
{

/// Complex C^0 -> C^1 -> ... -> C^{len-1}; everything outside is zero.
class CochainComplex
{
public:
    CochainComplex() = default;

    /// diffs[n] : levels[n] -> levels[n+1]; missing trailing maps are zero.
    CochainComplex(std::vector<FgAbGroup> levels, std::vector<GroupHom> diffs)
        : levels_(std::move(levels)), diffs_(std::move(diffs))
    {
        if (diffs_.size() > levels_.size())
            throw InvalidInput("CochainComplex: more differentials than levels");
        for (std::size_t n = 0; n < diffs_.size(); ++n)
        {
            if (!(diffs_[n].source() == levels_[n]) || !(diffs_[n].target() == level(n + 1)))
                throw InvalidInput("CochainComplex: differential " + std::to_string(n) + " has wrong source/target");
        }
        while (diffs_.size() < levels_.size())
            diffs_.push_back(GroupHom::zero(levels_[diffs_.size()], level(diffs_.size() + 1)));
        for (std::size_t n = 0; n + 1 < diffs_.size(); ++n)
            if (!diffs_[n + 1].compose(diffs_[n]).is_zero())
                throw InvalidInput("CochainComplex: d∘d != 0 at degree " + std::to_string(n));
    }

    /// Complex from raw matrices over given groups.
    static CochainComplex from_matrices(const std::vector<FgAbGroup>& levels, const std::vector<IntMatrix>& d)
    {
        std::vector<GroupHom> diffs;
        for (std::size_t n = 0; n < d.size(); ++n)
        {
            FgAbGroup tgt = n + 1 < levels.size() ? levels[n + 1] : FgAbGroup();
            diffs.emplace_back(levels.at(n), tgt, d[n]);
        }
        return CochainComplex(levels, diffs);
    }

    std::size_t length() const noexcept { return levels_.size(); }
    const std::vector<FgAbGroup>& levels() const noexcept { return levels_; }

    FgAbGroup level(std::size_t n) const { return n < levels_.size() ? levels_[n] : FgAbGroup(); }

    /// d^n : C^n -> C^{n+1}
    GroupHom diff(std::size_t n) const
    {
        if (n < diffs_.size())
            return diffs_[n];
        return GroupHom::zero(level(n), level(n + 1));
    }

    /// H^n = ker d^n / im d^{n-1} with lifting and coordinate witnesses.
    Subquotient cohomology_at(std::size_t n) const
    {
        const GroupHom dn = diff(n);
        IntMatrix D = detail::nonzero_diag_cols(level(n));
        IntMatrix Z = IntMatrix::hstack(detail::preimage_lattice(dn), D);
        IntMatrix B = n == 0 ? D : IntMatrix::hstack(diff(n - 1).matrix(), D);
        return Subquotient(Z, B);
    }

    /// H^0 .. H^{length-1}.
    std::vector<FgAbGroup> cohomology() const
    {
        std::vector<FgAbGroup> out;
        for (std::size_t n = 0; n < length(); ++n)
            out.push_back(cohomology_at(n).group());
        return out;
    }

    bool is_cocycle(std::size_t n, const IntVector& x) const
    {
        IntVector y = diff(n).apply(x);
        return std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; });
    }

private:
    std::vector<FgAbGroup> levels_;
    std::vector<GroupHom> diffs_;
};

class ChainMap
{
public:
    ChainMap() = default;

    ChainMap(CochainComplex source, CochainComplex target, std::vector<GroupHom> comps)
        : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps))
    {
        const std::size_t len = std::max(source_.length(), target_.length());
        for (std::size_t n = 0; n < comps_.size(); ++n)
            if (!(comps_[n].source() == source_.level(n)) || !(comps_[n].target() == target_.level(n)))
                throw InvalidInput("ChainMap: component " + std::to_string(n) + " has wrong source/target");
        while (comps_.size() < len)
            comps_.push_back(GroupHom::zero(source_.level(comps_.size()), target_.level(comps_.size())));
        for (std::size_t n = 0; n < len; ++n)
        {
            GroupHom lhs = component(n + 1).compose(source_.diff(n));
            GroupHom rhs = target_.diff(n).compose(component(n));
            if (!(lhs == rhs))
                throw InvalidInput("ChainMap: does not commute with differentials at degree " + std::to_string(n));
        }
    }

    static ChainMap from_matrices(const CochainComplex& s, const CochainComplex& t, const std::vector<IntMatrix>& m)
    {
        std::vector<GroupHom> comps;
        for (std::size_t n = 0; n < m.size(); ++n)
            comps.emplace_back(s.level(n), t.level(n), m[n]);
        return ChainMap(s, t, comps);
    }

    static ChainMap identity(const CochainComplex& c)
    {
        std::vector<GroupHom> comps;
        for (std::size_t n = 0; n < c.length(); ++n)
            comps.push_back(GroupHom::identity(c.level(n)));
        return ChainMap(c, c, comps);
    }

    static ChainMap zero(const CochainComplex& s, const CochainComplex& t) { return ChainMap(s, t, {}); }

    const CochainComplex& source() const noexcept { return source_; }
    const CochainComplex& target() const noexcept { return target_; }

    GroupHom component(std::size_t n) const
    {
        if (n < comps_.size())
            return comps_[n];
        return GroupHom::zero(source_.level(n), target_.level(n));
    }

    friend ChainMap operator-(const ChainMap& a, const ChainMap& b)
    {
        std::vector<GroupHom> c;
        for (std::size_t n = 0; n < a.comps_.size(); ++n)
            c.push_back(a.component(n) - b.component(n));
        return ChainMap(a.source_, a.target_, c);
    }

    friend ChainMap operator+(const ChainMap& a, const ChainMap& b)
    {
        std::vector<GroupHom> c;
        for (std::size_t n = 0; n < a.comps_.size(); ++n)
            c.push_back(a.component(n) + b.component(n));
        return ChainMap(a.source_, a.target_, c);
    }

    /// this ∘ g
    ChainMap compose(const ChainMap& g) const
    {
        std::vector<GroupHom> c;
        const std::size_t len = std::max(g.source_.length(), target_.length());
        for (std::size_t n = 0; n < len; ++n)
            c.push_back(component(n).compose(g.component(n)));
        return ChainMap(g.source_, target_, c);
    }

private:
    CochainComplex source_;
    CochainComplex target_;
    std::vector<GroupHom> comps_;
};

/// H^n(f) : H^n(source) -> H^n(target), computed on lifted representatives.
inline GroupHom induced_on_cohomology(const ChainMap& f, std::size_t n)
{
    Subquotient hs = f.source().cohomology_at(n);
    Subquotient ht = f.target().cohomology_at(n);
    const GroupHom fn = f.component(n);
    IntMatrix M(ht.group().dim(), hs.group().dim());
    for (std::size_t k = 0; k < hs.group().dim(); ++k)
        M.set_col(k, ht.coords(fn.matrix() * hs.lift(k)));
    return GroupHom(hs.group(), ht.group(), M);
}

inline std::vector<GroupHom> induced_on_cohomology(const ChainMap& f)
{
    std::vector<GroupHom> out;
    const std::size_t len = std::max(f.source().length(), f.target().length());
    for (std::size_t n = 0; n < len; ++n)
        out.push_back(induced_on_cohomology(f, n));
    return out;
}

/// Two cochain rows joined by a chain map row0 -> row1.
class TwoRowBicomplex
{
public:
    TwoRowBicomplex() = default;
    explicit TwoRowBicomplex(ChainMap vertical) : vertical_(std::move(vertical)) {}

    const CochainComplex& row0() const noexcept { return vertical_.source(); }
    const CochainComplex& row1() const noexcept { return vertical_.target(); }
    const ChainMap& vertical() const noexcept { return vertical_; }

private:
    ChainMap vertical_;
};

/// Tot^n = row1^{n-1} ⊕ row0^n with its canonical-form bookkeeping.
struct TotalComplex
{
    CochainComplex complex;
    std::vector<DirectSum> sums; // sums[n] splits Tot^n into (row1^{n-1}, row0^n)

    /// Canonical Tot^n coordinates of the pair (b, a), each in canonical row coordinates.
    IntVector embed(std::size_t n, const IntVector& b, const IntVector& a) const
    {
        IntVector concat = b;
        concat.insert(concat.end(), a.begin(), a.end());
        return complex.level(n).reduce(sums[n].to_canon * concat);
    }

    /// Inverse of embed: (row1^{n-1} part, row0^n part).
    std::pair<IntVector, IntVector> split(std::size_t n, const IntVector& x) const
    {
        IntVector c = sums[n].from_canon * x;
        const std::size_t nb = sums[n].summands[0].dim();
        return {IntVector(c.begin(), c.begin() + nb), IntVector(c.begin() + nb, c.end())};
    }
};

/**
 * Total complex with ∂(b, a) = (∂b + sign·(-1)^n·v(a), ∂a) on Tot^n.
 * sign = +1 is the standard convention; -1 gives the flipped one.
 */
inline TotalComplex total_complex(const TwoRowBicomplex& B, int sign = 1)
{
    const CochainComplex& r0 = B.row0();
    const CochainComplex& r1 = B.row1();
    const std::size_t len = std::max(r0.length(), r1.length() + 1);
    TotalComplex T;
    std::vector<FgAbGroup> levels;
    for (std::size_t n = 0; n < len; ++n)
    {
        FgAbGroup b = n == 0 ? FgAbGroup() : r1.level(n - 1);
        T.sums.push_back(direct_sum(b, r0.level(n)));
        levels.push_back(T.sums.back().group);
    }
    std::vector<GroupHom> diffs;
    for (std::size_t n = 0; n + 1 < len; ++n)
    {
        const DirectSum& s = T.sums[n];
        const DirectSum& t = T.sums[n + 1];
        const std::size_t sb = s.summands[0].dim(), sa = s.summands[1].dim();
        const std::size_t tb = t.summands[0].dim(), ta = t.summands[1].dim();
        IntMatrix blk(tb + ta, sb + sa);
        if (n > 0)
            blk.set_block(0, 0, r1.diff(n - 1).matrix());
        const Integer eps = ((n % 2 == 0) ? 1 : -1) * sign;
        blk.set_block(0, sb, eps * B.vertical().component(n).matrix());
        blk.set_block(tb, sb, r0.diff(n).matrix());
        diffs.push_back(hom_between_sums(s, t, blk));
    }
    T.complex = CochainComplex(levels, diffs);
    return T;
}

inline std::vector<FgAbGroup> total_cohomology(const TwoRowBicomplex& B, int sign = 1)
{
    return total_complex(B, sign).complex.cohomology();
}

struct SesReport
{
    std::size_t degree = 0;
    FgAbGroup left;
    FgAbGroup middle;
    FgAbGroup right;
    GroupHom inject;
    GroupHom surject;
    bool exact = false;
};

namespace detail
{

inline SesReport ses_at(const TwoRowBicomplex& B, const TotalComplex& T, std::size_t n)
{
    SesReport r;
    r.degree = n;
    Subquotient hmid = T.complex.cohomology_at(n);
    r.middle = hmid.group();

    // left = coker H^{n-1}(v), inject (b, 0)
    if (n == 0)
    {
        r.left = FgAbGroup();
        r.inject = GroupHom::zero(r.left, r.middle);
    }
    else
    {
        Subquotient h1 = B.row1().cohomology_at(n - 1);
        GroupWithMap ck = coker_of_hom(induced_on_cohomology(B.vertical(), n - 1));
        r.left = ck.group;
        IntMatrix M(r.middle.dim(), r.left.dim());
        const std::size_t na = B.row0().level(n).dim();
        for (std::size_t k = 0; k < r.left.dim(); ++k)
        {
            IntVector cls = ck.presentation.lift(k);
            IntVector b = h1.lift(cls);
            M.set_col(k, hmid.coords(T.embed(n, b, IntVector(na))));
        }
        r.inject = GroupHom(r.left, r.middle, M);
    }

    // right = ker H^n(v), surject (b, a) -> [a]
    Subquotient h0 = B.row0().cohomology_at(n);
    GroupWithMap kr = kernel(induced_on_cohomology(B.vertical(), n));
    r.right = kr.group;
    IntMatrix P(r.right.dim(), r.middle.dim());
    for (std::size_t k = 0; k < r.middle.dim(); ++k)
    {
        auto [b, a] = T.split(n, hmid.lift(k));
        P.set_col(k, kr.presentation.coords(h0.coords(a)));
    }
    r.surject = GroupHom(r.middle, r.right, P);
    r.exact = is_injective(r.inject) && is_surjective(r.surject) && exact_at(r.inject, r.surject);
    return r;
}

} // namespace detail

/// The short exact sequence in every degree of the total complex.
inline std::vector<SesReport> extract_ses(const TwoRowBicomplex& B)
{
    TotalComplex T = total_complex(B);
    std::vector<SesReport> out;
    for (std::size_t n = 0; n < T.complex.length(); ++n)
        out.push_back(detail::ses_at(B, T, n));
    return out;
}

/// Single degree, for callers that only trust degrees below a truncation.
inline SesReport extract_ses(const TwoRowBicomplex& B, std::size_t n)
{
    TotalComplex T = total_complex(B);
    return detail::ses_at(B, T, n);
}

} // namespace diffcoh

#endif // DIFFCOH_COMPLEX_HPP
