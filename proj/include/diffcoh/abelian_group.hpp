/**
 * Finitely generated abelian groups in invariant-factor form, their elements
 * and homomorphisms, and kernels / images / cokernels computed as
 * subquotients L/R of a free lattice.
 *
 * Canonical coordinates of Z/d1 + ... + Z/dk + Z^r are ordered torsion first,
 * then free.  Coordinate i has modulus d_i (0 for a free coordinate).
 */
#ifndef DIFFCOH_ABELIAN_GROUP_HPP
#define DIFFCOH_ABELIAN_GROUP_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "smith.hpp"

namespace diffcoh
{

class FgAbGroup
{
public:
    /// The trivial group.
    FgAbGroup() = default;

    /// Z^free_rank + sum Z/torsion[i]; torsion must be a divisibility chain of entries >= 2.
    FgAbGroup(std::size_t free_rank, IntVector torsion) : free_rank_(free_rank), torsion_(std::move(torsion))
    {
        for (std::size_t i = 0; i < torsion_.size(); ++i)
        {
            if (torsion_[i] < 2)
                throw InvalidInput("FgAbGroup: invariant factors must be >= 2");
            if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
                throw InvalidInput("FgAbGroup: invariant factors must form a divisibility chain");
        }
    }

    static FgAbGroup free(std::size_t r) { return FgAbGroup(r, {}); }
    static FgAbGroup cyclic(const Integer& n)
    {
        if (n == 0)
            return free(1);
        if (abs(n) == 1)
            return FgAbGroup();
        return FgAbGroup(0, {abs(n)});
    }

    /// Canonical form of Z^n / (column span of M).
    static FgAbGroup from_relations(const IntMatrix& M);

    /// Canonical form of a direct sum of cyclic groups Z/m_i (m_i = 0 means Z).
    static FgAbGroup from_moduli(const IntVector& moduli)
    {
        return from_relations(IntMatrix::diagonal(moduli));
    }

    std::size_t free_rank() const noexcept { return free_rank_; }
    const IntVector& torsion() const noexcept { return torsion_; }
    std::size_t dim() const noexcept { return torsion_.size() + free_rank_; }

    /// Modulus of canonical coordinate i (0 when free).
    Integer modulus(std::size_t i) const { return i < torsion_.size() ? torsion_[i] : Integer(0); }
    IntVector moduli() const
    {
        IntVector m(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            m[i] = modulus(i);
        return m;
    }
    IntMatrix relation_matrix() const { return IntMatrix::diagonal(moduli()); }

    bool is_finite() const noexcept { return free_rank_ == 0; }
    bool is_trivial() const noexcept { return dim() == 0; }

    Integer order() const
    {
        if (!is_finite())
            throw InfiniteGroup();
        Integer o = 1;
        for (const auto& d : torsion_)
            o *= d;
        return o;
    }

    /// Reduce a coordinate vector into [0, d_i) on torsion coordinates.
    IntVector reduce(IntVector v) const
    {
        if (v.size() != dim())
            throw InvalidInput("FgAbGroup: coordinate vector has wrong length");
        for (std::size_t i = 0; i < torsion_.size(); ++i)
            v[i] = mod_floor(v[i], torsion_[i]);
        return v;
    }

    bool equal_elements(const IntVector& a, const IntVector& b) const { return reduce(a) == reduce(b); }

    /// "Z^r + Z/d1 + Z/d2", "Z", "Z/2", or "0" for the trivial group.
    std::string notation() const
    {
        std::string s;
        auto append = [&](const std::string& part) {
            if (!s.empty())
                s += " + ";
            s += part;
        };
        if (free_rank_ == 1)
            append("Z");
        else if (free_rank_ > 1)
            append("Z^" + std::to_string(free_rank_));
        for (const auto& d : torsion_)
            append("Z/" + d.str());
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b)
    {
        return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
    }

    /// All elements in lexicographic coordinate order.
    std::vector<IntVector> enumerate() const
    {
        if (!is_finite())
            throw InfiniteGroup();
        std::vector<IntVector> out;
        IntVector cur(dim());
        for (;;)
        {
            out.push_back(cur);
            std::size_t k = dim();
            while (k > 0)
            {
                --k;
                if (++cur[k] < torsion_[k])
                    break;
                cur[k] = 0;
                if (k == 0)
                    return out;
            }
            if (dim() == 0)
                return out;
        }
    }

    /// Visit every element without materialising the list.
    void for_each_element(const std::function<void(const IntVector&)>& fn) const
    {
        if (!is_finite())
            throw InfiniteGroup();
        IntVector cur(dim());
        for (;;)
        {
            fn(cur);
            std::size_t k = dim();
            for (;;)
            {
                if (k == 0)
                    return;
                --k;
                if (++cur[k] < torsion_[k])
                    break;
                cur[k] = 0;
            }
        }
    }

    /// Mixed-radix index of an element of a finite group (lexicographic rank).
    std::size_t index_of(const IntVector& v) const
    {
        IntVector r = reduce(v);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < torsion_.size(); ++i)
            idx = idx * torsion_[i].convert_to<std::size_t>() + r[i].convert_to<std::size_t>();
        return idx;
    }

    IntVector element_at(std::size_t idx) const
    {
        IntVector v(dim());
        for (std::size_t k = torsion_.size(); k > 0; --k)
        {
            std::size_t d = torsion_[k - 1].convert_to<std::size_t>();
            v[k - 1] = idx % d;
            idx /= d;
        }
        return v;
    }

private:
    std::size_t free_rank_ = 0;
    IntVector torsion_;
};

/// An element of a FgAbGroup, kept reduced.
class GroupElement
{
public:
    GroupElement(FgAbGroup group, IntVector coords) : group_(std::move(group)), coords_(group_.reduce(std::move(coords))) {}

    const FgAbGroup& group() const noexcept { return group_; }
    const IntVector& coords() const noexcept { return coords_; }

    friend bool operator==(const GroupElement& a, const GroupElement& b)
    {
        return a.group_ == b.group_ && a.coords_ == b.coords_;
    }

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b)
    {
        if (!(a.group_ == b.group_))
            throw InvalidInput("GroupElement: adding elements of different groups");
        IntVector c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += b.coords_[i];
        return GroupElement(a.group_, std::move(c));
    }

    friend GroupElement operator-(const GroupElement& a)
    {
        IntVector c = a.coords_;
        for (auto& x : c)
            x = -x;
        return GroupElement(a.group_, std::move(c));
    }

    friend GroupElement operator*(const Integer& k, const GroupElement& a)
    {
        IntVector c = a.coords_;
        for (auto& x : c)
            x *= k;
        return GroupElement(a.group_, std::move(c));
    }

private:
    FgAbGroup group_;
    IntVector coords_;
};

inline bool element_equal(const GroupElement& a, const GroupElement& b) { return a == b; }

/// Homomorphism between canonical groups, acting on canonical coordinates.
class GroupHom
{
public:
    GroupHom() = default;

    GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
    {
        if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
            throw InvalidInput("GroupHom: matrix shape does not match source/target");
        for (std::size_t i = 0; i < source_.dim(); ++i)
        {
            const Integer di = source_.modulus(i);
            for (std::size_t j = 0; j < target_.dim(); ++j)
            {
                const Integer ej = target_.modulus(j);
                if (ej == 0)
                {
                    if (di != 0 && matrix_(j, i) != 0)
                        throw InvalidInput("GroupHom: torsion generator mapped to a free coordinate");
                }
                else
                {
                    matrix_(j, i) = mod_floor(matrix_(j, i), ej);
                    if (di != 0 && (di * matrix_(j, i)) % ej != 0)
                        throw InvalidInput("GroupHom: matrix does not respect the relations of the source");
                }
            }
        }
    }

    static GroupHom zero(const FgAbGroup& s, const FgAbGroup& t) { return GroupHom(s, t, IntMatrix(t.dim(), s.dim())); }
    static GroupHom identity(const FgAbGroup& g) { return GroupHom(g, g, IntMatrix::identity(g.dim())); }
    static GroupHom scalar(const FgAbGroup& g, const Integer& k)
    {
        return GroupHom(g, g, k * IntMatrix::identity(g.dim()));
    }

    const FgAbGroup& source() const noexcept { return source_; }
    const FgAbGroup& target() const noexcept { return target_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

    IntVector apply(const IntVector& x) const { return target_.reduce(matrix_ * x); }
    GroupElement operator()(const GroupElement& x) const { return GroupElement(target_, matrix_ * x.coords()); }

    /// this ∘ g
    GroupHom compose(const GroupHom& g) const
    {
        if (!(g.target_ == source_))
            throw InvalidInput("GroupHom::compose: target/source mismatch");
        return GroupHom(g.source_, target_, matrix_ * g.matrix_);
    }

    bool is_zero() const { return matrix_.is_zero(); }

    friend GroupHom operator+(const GroupHom& a, const GroupHom& b)
    {
        return GroupHom(a.source_, a.target_, a.matrix_ + b.matrix_);
    }
    friend GroupHom operator-(const GroupHom& a, const GroupHom& b)
    {
        return GroupHom(a.source_, a.target_, a.matrix_ - b.matrix_);
    }
    friend GroupHom operator*(const Integer& k, const GroupHom& a) { return GroupHom(a.source_, a.target_, k * a.matrix_); }

    friend bool operator==(const GroupHom& a, const GroupHom& b)
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
    }

private:
    FgAbGroup source_;
    FgAbGroup target_;
    IntMatrix matrix_;
};

/**
 * The quotient L/R of two lattices R ⊆ L ⊆ Z^n (given by generating columns),
 * in canonical form, with the coordinate map and generator lifts.
 */
class Subquotient
{
public:
    Subquotient() = default;

    Subquotient(const IntMatrix& L_gens, const IntMatrix& R_gens) : ambient_(L_gens.rows())
    {
        if (R_gens.rows() != ambient_)
            throw InvalidInput("Subquotient: ambient dimension mismatch");
        SmithForm fl = smith_normal_form(L_gens);
        rank_ = fl.rank;
        std::vector<std::size_t> first(rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            first[i] = i;
        basis_scale_ = fl.diagonal();
        Urows_ = fl.U;
        // basis of L: Uinv[:, :rank] * diag(s)
        basis_ = fl.Uinv.select_cols(first) * IntMatrix::diagonal(basis_scale_);

        IntMatrix X(rank_, R_gens.cols());
        for (std::size_t j = 0; j < R_gens.cols(); ++j)
        {
            auto y = basis_coords(R_gens.col(j));
            if (!y)
                throw InvalidInput("Subquotient: R is not contained in L");
            X.set_col(j, *y);
        }
        SmithForm fx = smith_normal_form(X);
        std::vector<std::size_t> kept;
        IntVector torsion;
        std::size_t nfree = 0;
        for (std::size_t i = 0; i < rank_; ++i)
        {
            if (i < fx.rank)
            {
                if (fx.S(i, i) != 1)
                {
                    kept.push_back(i);
                    torsion.push_back(fx.S(i, i));
                }
            }
            else
            {
                kept.push_back(i);
                ++nfree;
            }
        }
        group_ = FgAbGroup(nfree, torsion);
        to_canon_ = fx.U.select_rows(kept);
        // generator lifts: basis * Uinv_x[:, kept]
        lifts_ = basis_ * fx.Uinv.select_cols(kept);
    }

    const FgAbGroup& group() const noexcept { return group_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }

    /// Columns: representatives in Z^n of the canonical generators.
    const IntMatrix& lifts() const noexcept { return lifts_; }
    IntVector lift(std::size_t k) const { return lifts_.col(k); }
    IntVector lift(const IntVector& canon) const { return lifts_ * canon; }

    bool contains(const IntVector& v) const { return basis_coords(v).has_value(); }

    /// Canonical coordinates of the class of v ∈ L.
    IntVector coords(const IntVector& v) const
    {
        auto y = basis_coords(v);
        if (!y)
            throw InvalidInput("Subquotient: vector is not in the lattice L");
        return group_.reduce(to_canon_ * *y);
    }

    /// True when v ∈ R (zero class); v must lie in L.
    bool is_zero_class(const IntVector& v) const
    {
        IntVector c = coords(v);
        for (const auto& x : c)
            if (x != 0)
                return false;
        return true;
    }

    /// Coordinates of v with respect to the Z-basis of L, when v ∈ L.
    std::optional<IntVector> basis_coords(const IntVector& v) const
    {
        IntVector c = Urows_ * v;
        IntVector y(rank_);
        for (std::size_t i = 0; i < c.size(); ++i)
        {
            if (i < rank_)
            {
                if (c[i] % basis_scale_[i] != 0)
                    return std::nullopt;
                y[i] = c[i] / basis_scale_[i];
            }
            else if (c[i] != 0)
                return std::nullopt;
        }
        return y;
    }

private:
    std::size_t ambient_ = 0;
    std::size_t rank_ = 0;
    IntVector basis_scale_;
    IntMatrix Urows_;
    IntMatrix basis_;
    IntMatrix to_canon_;
    IntMatrix lifts_;
    FgAbGroup group_;
};

inline FgAbGroup FgAbGroup::from_relations(const IntMatrix& M)
{
    SmithForm f = smith_normal_form(M);
    IntVector torsion;
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.S(i, i) != 1)
            torsion.push_back(f.S(i, i));
    return FgAbGroup(M.rows() - f.rank, torsion);
}

/// Canonical group coker(M: Z^cols -> Z^rows).
inline FgAbGroup cokernel(const IntMatrix& M) { return FgAbGroup::from_relations(M); }

/// A subgroup or quotient together with its structure map.
struct GroupWithMap
{
    FgAbGroup group;
    GroupHom map;
    Subquotient presentation;
};

namespace detail
{

inline IntMatrix nonzero_diag_cols(const FgAbGroup& g)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        idx.push_back(i);
    return g.relation_matrix().select_cols(idx);
}

/// Lattice {x : M x ∈ span(D_target)} as generating columns.
inline IntMatrix preimage_lattice(const GroupHom& h)
{
    const std::size_t ns = h.source().dim();
    IntMatrix K = IntMatrix::hstack(h.matrix(), nonzero_diag_cols(h.target()));
    IntMatrix ker = integer_kernel(K);
    std::vector<std::size_t> top(ns);
    for (std::size_t i = 0; i < ns; ++i)
        top[i] = i;
    return ker.select_rows(top);
}

} // namespace detail

/// ker(h) with inclusion into the source.
inline GroupWithMap kernel(const GroupHom& h)
{
    IntMatrix L = IntMatrix::hstack(detail::preimage_lattice(h), detail::nonzero_diag_cols(h.source()));
    Subquotient sq(L, detail::nonzero_diag_cols(h.source()));
    GroupHom inc(sq.group(), h.source(), sq.lifts());
    return {sq.group(), inc, sq};
}

/// im(h) with inclusion into the target.
inline GroupWithMap image(const GroupHom& h)
{
    IntMatrix D = detail::nonzero_diag_cols(h.target());
    Subquotient sq(IntMatrix::hstack(h.matrix(), D), D);
    GroupHom inc(sq.group(), h.target(), sq.lifts());
    return {sq.group(), inc, sq};
}

/// coker(h) with projection from the target.
inline GroupWithMap coker_of_hom(const GroupHom& h)
{
    const std::size_t n = h.target().dim();
    Subquotient sq(IntMatrix::identity(n), IntMatrix::hstack(h.matrix(), detail::nonzero_diag_cols(h.target())));
    IntMatrix proj(sq.group().dim(), n);
    for (std::size_t j = 0; j < n; ++j)
    {
        IntVector e(n);
        e[j] = 1;
        proj.set_col(j, sq.coords(e));
    }
    GroupHom p(h.target(), sq.group(), proj);
    return {sq.group(), p, sq};
}

inline bool is_injective(const GroupHom& h) { return kernel(h).group.is_trivial(); }
inline bool is_surjective(const GroupHom& h) { return coker_of_hom(h).group.is_trivial(); }

/// g ∘ f = 0 and ker(g) = im(f).
inline bool exact_at(const GroupHom& f, const GroupHom& g)
{
    if (!(f.target() == g.source()))
        return false;
    if (!g.compose(f).is_zero())
        return false;
    IntMatrix D = detail::nonzero_diag_cols(g.source());
    IntMatrix L = IntMatrix::hstack(detail::preimage_lattice(g), D);
    Subquotient sq(L, IntMatrix::hstack(f.matrix(), D));
    return sq.group().is_trivial();
}

/// A ⊕ B ⊕ ... in canonical form with the coordinate changes to and from the
/// concatenated (non-canonical) coordinates.
struct DirectSum
{
    FgAbGroup group;
    std::vector<FgAbGroup> summands;
    std::vector<std::size_t> offsets; // start of each summand in concatenated coordinates
    IntMatrix to_canon;               // canonical <- concatenated
    IntMatrix from_canon;             // concatenated <- canonical
    std::size_t concat_dim = 0;

    GroupHom injection(std::size_t k) const
    {
        IntMatrix E(concat_dim, summands[k].dim());
        for (std::size_t i = 0; i < summands[k].dim(); ++i)
            E(offsets[k] + i, i) = 1;
        return GroupHom(summands[k], group, to_canon * E);
    }

    GroupHom projection(std::size_t k) const
    {
        IntMatrix P(summands[k].dim(), concat_dim);
        for (std::size_t i = 0; i < summands[k].dim(); ++i)
            P(i, offsets[k] + i) = 1;
        return GroupHom(group, summands[k], P * from_canon);
    }
};

inline DirectSum direct_sum(const std::vector<FgAbGroup>& parts)
{
    DirectSum ds;
    ds.summands = parts;
    IntVector moduli;
    for (const auto& g : parts)
    {
        ds.offsets.push_back(moduli.size());
        for (std::size_t i = 0; i < g.dim(); ++i)
            moduli.push_back(g.modulus(i));
    }
    ds.concat_dim = moduli.size();
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i] != 0)
            nz.push_back(i);
    IntMatrix R = IntMatrix::diagonal(moduli).select_cols(nz);
    Subquotient sq(IntMatrix::identity(ds.concat_dim), R);
    ds.group = sq.group();
    ds.from_canon = sq.lifts();
    ds.to_canon = IntMatrix(ds.group.dim(), ds.concat_dim);
    for (std::size_t j = 0; j < ds.concat_dim; ++j)
    {
        IntVector e(ds.concat_dim);
        e[j] = 1;
        ds.to_canon.set_col(j, sq.coords(e));
    }
    return ds;
}

inline DirectSum direct_sum(const FgAbGroup& a, const FgAbGroup& b) { return direct_sum(std::vector<FgAbGroup>{a, b}); }

/// Hom between direct sums given as a block matrix on concatenated coordinates.
inline GroupHom hom_between_sums(const DirectSum& s, const DirectSum& t, const IntMatrix& concat)
{
    return GroupHom(s.group, t.group, t.to_canon * concat * s.from_canon);
}

} // namespace diffcoh

#endif // DIFFCOH_ABELIAN_GROUP_HPP
