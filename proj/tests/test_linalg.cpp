#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <diffcoh/abelian_group.hpp>

#include "oracles.hpp"

using namespace diffcoh;

namespace
{

bool divisibility_chain(const SmithForm& f)
{
    for (std::size_t i = 0; i + 1 < f.rank; ++i)
        if (f.S(i + 1, i + 1) % f.S(i, i) != 0)
            return false;
    for (std::size_t i = 0; i < f.S.rows(); ++i)
        for (std::size_t j = 0; j < f.S.cols(); ++j)
            if (i != j && f.S(i, j) != 0)
                return false;
    for (std::size_t i = f.rank; i < std::min(f.S.rows(), f.S.cols()); ++i)
        if (f.S(i, i) != 0)
            return false;
    return true;
}

void check_witness(const IntMatrix& M, const SmithForm& f)
{
    REQUIRE(f.U * M * f.V == f.S);
    REQUIRE(f.U * f.Uinv == IntMatrix::identity(M.rows()));
    REQUIRE(f.V * f.Vinv == IntMatrix::identity(M.cols()));
    REQUIRE(is_unimodular(f.U));
    REQUIRE(is_unimodular(f.V));
    REQUIRE(divisibility_chain(f));
}

FgAbGroup Zn(long long n) { return FgAbGroup::cyclic(n); }

} // namespace

TEST_CASE("snf of the identity is the identity with identity witnesses")
{
    auto f = smith_normal_form(IntMatrix::identity(3));
    CHECK(f.S == IntMatrix::identity(3));
    CHECK(f.U == IntMatrix::identity(3));
    CHECK(f.V == IntMatrix::identity(3));
}

TEST_CASE("snf of the zero matrix is zero")
{
    auto f = smith_normal_form(IntMatrix(2, 2));
    CHECK(f.S.is_zero());
    CHECK(f.rank == 0);
}

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)")
{
    IntMatrix M{{2, 4}, {6, 8}};
    // oracle: d1 = gcd of entries, d1*d2 = |det|
    Integer g = 0;
    for (const auto& x : M.entries())
        g = gcd(g, x);
    Integer det = abs(determinant(M));
    REQUIRE(g == 2);
    REQUIRE(det == 8);
    auto f = smith_normal_form(M);
    check_witness(M, f);
    CHECK(f.S(0, 0) == g);
    CHECK(f.S(1, 1) == det / g);
}

TEST_CASE("snf is deterministic")
{
    IntMatrix M{{3, 5, 7}, {2, -4, 6}, {0, 9, 1}};
    auto a = smith_normal_form(M), b = smith_normal_form(M);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
    CHECK(a.S == b.S);
}

TEST_CASE("property: random snf witnesses and determinantal divisors")
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int it = 0; it < 300; ++it)
    {
        const std::size_t r = dim(rng), c = dim(rng);
        IntMatrix M = oracle::random_matrix(rng, r, c, -9, 9);
        auto f = smith_normal_form(M);
        check_witness(M, f);
        if (std::max(r, c) <= 4)
        {
            auto expect = oracle::expected_smith_diagonal(M);
            for (std::size_t i = 0; i < expect.size(); ++i)
                REQUIRE(f.S(i, i) == expect[i]);
        }
    }
}

TEST_CASE("cokernel examples")
{
    CHECK(cokernel(IntMatrix::identity(2)).is_trivial());
    CHECK(cokernel(IntMatrix{{3}}) == Zn(3));
    CHECK(cokernel(IntMatrix{{2, 4}, {6, 8}}) == FgAbGroup(0, {2, 4}));
    CHECK(cokernel(IntMatrix{{2, 4}, {6, 8}}).notation() == "Z/2 + Z/4");
    CHECK(cokernel(IntMatrix(2, 0)).notation() == "Z^2");
}

TEST_CASE("property: coker invariant under unimodular moves")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int it = 0; it < 200; ++it)
    {
        const std::size_t r = dim(rng), c = dim(rng);
        IntMatrix M = oracle::random_matrix(rng, r, c, -9, 9);
        IntMatrix U = oracle::random_unimodular(rng, r), V = oracle::random_unimodular(rng, c);
        REQUIRE(cokernel(M) == cokernel(U * M * V));
    }
}

TEST_CASE("kernel examples")
{
    CHECK(kernel(GroupHom::identity(Zn(6))).group.is_trivial());
    CHECK(kernel(GroupHom::scalar(FgAbGroup::free(1), 2)).group.is_trivial());

    // ker(×2 on Z/6): enumerate
    std::set<long long> ker;
    for (long long x = 0; x < 6; ++x)
        if ((2 * x) % 6 == 0)
            ker.insert(x);
    REQUIRE(ker == std::set<long long>{0, 3});
    auto k = kernel(GroupHom::scalar(Zn(6), 2));
    CHECK(k.group == Zn(2));
    CHECK(k.map.apply({1}) == IntVector{3});
}

TEST_CASE("image and coker examples")
{
    std::set<long long> img;
    for (long long x = 0; x < 6; ++x)
        img.insert((3 * x) % 6);
    CHECK(image(GroupHom::scalar(Zn(6), 3)).group == Zn(static_cast<long long>(img.size())));
    CHECK(coker_of_hom(GroupHom::identity(Zn(6))).group.is_trivial());
    CHECK(coker_of_hom(GroupHom::scalar(FgAbGroup::free(1), 4 - 1)).group == Zn(3));
}

TEST_CASE("enumerate and element equality")
{
    FgAbGroup K4(0, {2, 2});
    auto e = K4.enumerate();
    CHECK(e.size() == 4);
    CHECK(e.front() == IntVector{0, 0});
    CHECK(e.back() == IntVector{1, 1});
    CHECK_THROWS_AS(FgAbGroup::free(1).enumerate(), InfiniteGroup);
    CHECK_THROWS_WITH(FgAbGroup::free(1).enumerate(), "infinite group");
    CHECK(element_equal(GroupElement(Zn(3), {1}), GroupElement(Zn(3), {4})));
    CHECK_FALSE(element_equal(GroupElement(Zn(3), {1}), GroupElement(Zn(3), {2})));
}

TEST_CASE("ill-defined homomorphisms are rejected")
{
    CHECK_THROWS_AS(GroupHom(Zn(4), Zn(6), IntMatrix{{1}}), InvalidInput);
    CHECK_THROWS_AS(GroupHom(Zn(2), FgAbGroup::free(1), IntMatrix{{1}}), InvalidInput);
    CHECK_NOTHROW(GroupHom(Zn(4), Zn(6), IntMatrix{{3}}));
    CHECK_THROWS_AS(FgAbGroup(0, {2, 3}), InvalidInput);
}

TEST_CASE("property: first isomorphism theorem on random finite homs")
{
    std::mt19937_64 rng(99);
    const std::vector<FgAbGroup> pool{Zn(2), Zn(4), Zn(6), Zn(12), FgAbGroup(0, {2, 2}), FgAbGroup(0, {2, 6}),
                                      FgAbGroup(0, {3, 3}), FgAbGroup(0, {2, 4, 8})};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(0, 30);
    for (int it = 0; it < 200; ++it)
    {
        const FgAbGroup A = pool[pick(rng)], B = pool[pick(rng)];
        IntMatrix M(B.dim(), A.dim());
        for (std::size_t j = 0; j < B.dim(); ++j)
            for (std::size_t i = 0; i < A.dim(); ++i)
            {
                // multiple of e_j / gcd(d_i, e_j) makes the column well defined
                Integer step = B.modulus(j) / gcd(A.modulus(i), B.modulus(j));
                M(j, i) = step * coef(rng);
            }
        GroupHom h(A, B, M);
        auto k = kernel(h), im = image(h), ck = coker_of_hom(h);
        REQUIRE(k.group.order() * im.group.order() == A.order());
        REQUIRE(im.group.order() * ck.group.order() == B.order());

        // brute-force kernel and image, compared through kill profiles
        std::vector<IntVector> kel, iel;
        std::set<IntVector> iset;
        for (const auto& x : A.enumerate())
        {
            IntVector y = h.apply(x);
            if (std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; }))
                kel.push_back(x);
            iset.insert(y);
        }
        iel.assign(iset.begin(), iset.end());
        auto addA = [&](const IntVector& a, const IntVector& b) {
            IntVector c = a;
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] += b[i];
            return A.reduce(c);
        };
        auto addB = [&](const IntVector& a, const IntVector& b) {
            IntVector c = a;
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] += b[i];
            return B.reduce(c);
        };
        REQUIRE(oracle::kill_profile(kel, addA, [&] { return IntVector(A.dim()); }, 16) ==
                oracle::kill_profile(k.group, 16));
        REQUIRE(oracle::kill_profile(iel, addB, [&] { return IntVector(B.dim()); }, 16) ==
                oracle::kill_profile(im.group, 16));
        REQUIRE(exact_at(k.map, h));
        REQUIRE(exact_at(h, ck.map));
    }
}

TEST_CASE("direct sums reach canonical form")
{
    auto ds = direct_sum(Zn(2), Zn(3));
    CHECK(ds.group == Zn(6));
    auto ds2 = direct_sum(std::vector<FgAbGroup>{Zn(2), FgAbGroup::free(1), Zn(4)});
    CHECK(ds2.group.notation() == "Z + Z/2 + Z/4");
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(ds2.projection(k).compose(ds2.injection(k)) == GroupHom::identity(ds2.summands[k]));
}

TEST_CASE("subquotient coordinates of a lattice quotient")
{
    // L = Z^2, R = span{(2,0),(0,3)}: Z/6
    Subquotient sq(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 3}});
    CHECK(sq.group() == Zn(6));
    CHECK(sq.is_zero_class({4, 9}));
    CHECK_FALSE(sq.is_zero_class({1, 0}));
}
