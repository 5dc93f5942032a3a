#include <catch_amalgamated.hpp>

#include <random>

#include <diffcoh/cech.hpp>
#include <diffcoh/nonabelian_cech.hpp>
#include <diffcoh/simplicial.hpp>

using namespace diffcoh;

namespace
{

FgAbGroup Z() { return FgAbGroup::free(1); }

std::vector<std::size_t> rotation(std::size_t n, std::size_t k)
{
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = (i + k) % n;
    return v;
}

std::vector<std::size_t> identity_map(std::size_t n) { return rotation(n, 0); }

// two open sets of a circle meeting in two arcs
CochainComplex two_arc_circle()
{
    return CochainComplex::from_matrices({FgAbGroup::free(2), FgAbGroup::free(2)}, {IntMatrix{{-1, 1}, {-1, 1}}});
}

} // namespace

TEST_CASE("σ̌ = res gives the vertical-zero splitting")
{
    auto C = two_arc_circle();
    CoverPresheafData d(C, C, ChainMap::identity(C), ChainMap::identity(C));
    auto h = difference_cech_cohomology(d);
    REQUIRE(C.cohomology() == std::vector<FgAbGroup>{Z(), Z()});
    CHECK(h == std::vector<FgAbGroup>{Z(), FgAbGroup::free(2), Z()});
}

TEST_CASE("single-set cover reduces to the point computation")
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {12, 5}, {7, 3}})
    {
        SigmaModule M = SigmaModule::cyclic(n, k);
        CombinatorialCover cov(SimplicialComplex::point(), {0});
        auto h = difference_cech_cohomology(cech_model(cov, M).data);
        auto p = point_difference_cohomology(M);
        REQUIRE(h[0] == p[0]);
        REQUIRE(h[1] == p[1]);
    }
}

TEST_CASE("cocycle_check examples")
{
    auto C = two_arc_circle();
    CoverPresheafData d(C, C, ChainMap::identity(C), ChainMap::identity(C));
    CHECK(cocycle_check(1, {0, 0}, {0, 0}, d));
    CHECK(cocycle_check(1, {0, 0}, {1, 1}, d));
    CHECK_FALSE(cocycle_check(0, {}, {1, 0}, d));
}

TEST_CASE("property: cocycle_check agrees with the kernel of the assembled total differential")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto X = SimplicialComplex::polygon(4);
    auto m = cech_model(CombinatorialCover(X, rotation(4, 1)), SigmaModule::cyclic(0, -1));
    TotalComplex T = total_complex(m.data.bicomplex());
    for (std::size_t n = 0; n + 1 < T.complex.length(); ++n)
    {
        const GroupHom dn = T.complex.diff(n);
        const IntMatrix K = integer_kernel(dn.matrix());
        for (int it = 0; it < 30; ++it)
        {
            IntVector x(T.complex.level(n).dim());
            if (it % 2 == 0 && K.cols() > 0)
            {
                IntVector w(K.cols());
                for (auto& v : w)
                    v = coef(rng);
                x = K * w;
            }
            else
                for (auto& v : x)
                    v = coef(rng);
            auto [b, a] = T.split(n, x);
            const IntVector y = dn.apply(x);
            const bool zero = std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; });
            REQUIRE(cocycle_check(n, b, a, m.data) == zero);
        }
    }
}

TEST_CASE("cech_to_derived examples")
{
    auto pt = SimplicialComplex::point();
    auto r0 = cech_to_derived_check(cech_model(CombinatorialCover(pt, {0}), SigmaModule::cyclic(0, 1)).data,
                                    difference_cohomology(pt, SelfMapSpec::identity(pt), SigmaModule::cyclic(0, 1)));
    CHECK(r0.match);
    auto C = SimplicialComplex::polygon(3);
    auto r1 = cech_to_derived_check(cech_model(CombinatorialCover(C, identity_map(3)), SigmaModule::cyclic(0, 1)).data,
                                    difference_cohomology(C, SelfMapSpec::identity(C), SigmaModule::cyclic(0, 1)));
    CHECK(r1.match);
    CHECK(r1.cech[0] == Z());
    CHECK(r1.cech[1] == FgAbGroup::free(2));
    auto r2 = cech_to_derived_check(cech_model(CombinatorialCover(C, identity_map(3)), SigmaModule::cyclic(3, 2)).data,
                                    difference_cohomology(C, SelfMapSpec::identity(C), SigmaModule::cyclic(3, 2)));
    CHECK(r2.match);
}

TEST_CASE("property: Čech and simplicial difference cohomology agree in degrees 0 and 1")
{
    std::vector<std::pair<SimplicialComplex, std::vector<std::size_t>>> cases;
    for (std::size_t n = 3; n <= 5; ++n)
    {
        cases.push_back({SimplicialComplex::polygon(n), rotation(n, 1)});
        std::vector<std::size_t> refl(n);
        for (std::size_t i = 0; i < n; ++i)
            refl[i] = (n - i) % n;
        cases.push_back({SimplicialComplex::polygon(n), refl});
    }
    cases.push_back({SimplicialComplex::simplex(2), {1, 2, 0}});
    cases.push_back({SimplicialComplex::simplex(2), {0, 0, 1}});
    const std::vector<SigmaModule> coeffs{SigmaModule::cyclic(0, 1), SigmaModule::cyclic(0, -1), SigmaModule::cyclic(4, 3),
                                          SigmaModule::cyclic(6, 5)};
    for (const auto& [X, v] : cases)
        for (const auto& A : coeffs)
        {
            auto r = cech_to_derived_check(cech_model(CombinatorialCover(X, v), A).data,
                                           difference_cohomology(X, SelfMapSpec::vertices(v), A));
            REQUIRE(r.match);
        }
}

TEST_CASE("property: the Čech SES is exact with multiplicative orders")
{
    for (std::size_t n = 3; n <= 5; ++n)
        for (const auto& A : {SigmaModule::cyclic(4, 3), SigmaModule::cyclic(9, 2), SigmaModule::cyclic(6, 1)})
            for (const auto& r : extract_ses(cech_model(CombinatorialCover(SimplicialComplex::polygon(n), rotation(n, 2)), A).data.bicomplex()))
            {
                REQUIRE(r.exact);
                REQUIRE(r.middle.order() == r.left.order() * r.right.order());
            }
}

TEST_CASE("degree 0 by enumeration: compatible global sections")
{
    // Ȟ^0_σ = {c ∈ Č^0 : ∂c = 0, res c = σ̌ c}
    auto X = SimplicialComplex::polygon(4);
    for (const auto& A : {SigmaModule::cyclic(4, 3), SigmaModule::cyclic(6, 5), SigmaModule::cyclic(5, 1)})
    {
        auto m = cech_model(CombinatorialCover(X, rotation(4, 1)), A);
        const auto& U = m.data.nerve_U;
        std::size_t count = 0;
        U.level(0).for_each_element([&](const IntVector& c) {
            auto dc = U.diff(0).apply(c);
            auto r = (m.data.res - m.data.sigma_check).component(0).apply(c);
            auto zero = [](const IntVector& v) { return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }); };
            if (zero(dc) && zero(r))
                ++count;
        });
        REQUIRE(Integer(count) == difference_cech_cohomology(m.data)[0].order());
    }
}

TEST_CASE("nonabelian Ȟ^1 examples")
{
    auto pt = SimplicialComplex::point();
    CombinatorialCover cov(pt, {0});
    auto triv = FiniteSigmaGroup({"e"}, {{0}}, {0});
    CHECK(nonabelian_h1(NonabelianCechData::from_cover(cov, triv)).classes.size() == 1);
    auto S3 = symmetric_group(3);
    auto h = nonabelian_h1(NonabelianCechData::from_cover(cov, S3));
    CHECK(h.classes.size() == 3);
    CHECK(h.classes.size() == S3.as_orbits().size());
}

TEST_CASE("property: nonabelian Ȟ^1 on abelian data matches the abelian computation")
{
    std::vector<SigmaModule> mods;
    for (long long n : {1, 2, 3, 4, 5, 6, 8})
        for (long long k = 0; k < n; ++k)
            mods.push_back(SigmaModule::cyclic(n, k));
    FgAbGroup K4(0, {2, 2});
    mods.emplace_back(K4, IntMatrix{{0, 1}, {1, 0}});
    mods.emplace_back(K4, IntMatrix::identity(2));
    std::vector<std::pair<SimplicialComplex, std::vector<std::size_t>>> spaces{
        {SimplicialComplex::point(), {0}},
        {SimplicialComplex::polygon(3), {0, 1, 2}},
        {SimplicialComplex::polygon(3), {1, 2, 0}},
        {SimplicialComplex::polygon(3), {0, 2, 1}}};
    for (const auto& [X, v] : spaces)
        for (const auto& M : mods)
        {
            CombinatorialCover cov(X, v);
            auto ab = difference_cech_cohomology(cech_model(cov, M).data);
            auto na = nonabelian_h1(NonabelianCechData::from_cover(cov, to_finite_sigma_group(M)));
            REQUIRE(Integer(na.classes.size()) == ab[1].order());
        }
}

TEST_CASE("nonabelian Ȟ^1 respects its bound")
{
    CombinatorialCover cov(SimplicialComplex::polygon(5), rotation(5, 1));
    CHECK_THROWS_AS(nonabelian_h1(NonabelianCechData::from_cover(cov, symmetric_group(4)), 1e3), BoundExceeded);
}
