#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <diffcoh/sigma_module.hpp>

using namespace diffcoh;

namespace
{

// |{x in Z/n : k x ≡ x}| and |Z/n / (k-1)Z/n| by enumeration
std::pair<long long, long long> cyclic_oracle(long long n, long long k)
{
    long long fixed = 0;
    std::set<long long> img;
    for (long long x = 0; x < n; ++x)
    {
        const long long y = (((k - 1) * x) % n + n) % n;
        if (y == 0)
            ++fixed;
        img.insert(y);
    }
    return {fixed, n / static_cast<long long>(img.size())};
}

FiniteSigmaGroup cyclic_table(std::size_t n, std::size_t k)
{
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::size_t> endo(n);
    for (std::size_t x = 0; x < n; ++x)
    {
        labels.push_back(std::to_string(x));
        endo[x] = (k * x) % n;
        for (std::size_t y = 0; y < n; ++y)
            t[x][y] = (x + y) % n;
    }
    return FiniteSigmaGroup(labels, t, endo);
}

} // namespace

TEST_CASE("invariants examples")
{
    CHECK(invariants(SigmaModule::cyclic(0, 1)) == FgAbGroup::free(1));
    CHECK(invariants(SigmaModule::cyclic(0, 2)).is_trivial());
    auto [fixed, coinv] = cyclic_oracle(8, 3);
    REQUIRE(fixed == 2);
    CHECK(invariants(SigmaModule::cyclic(8, 3)) == FgAbGroup::cyclic(fixed));
    CHECK(invariants_with_map(SigmaModule::cyclic(8, 3)).map.apply({1}) == IntVector{4});
}

TEST_CASE("coinvariants examples")
{
    CHECK(coinvariants(SigmaModule::cyclic(0, 1)) == FgAbGroup::free(1));
    CHECK(coinvariants(SigmaModule::cyclic(0, 4)) == FgAbGroup::cyclic(3));
    auto [fixed, coinv] = cyclic_oracle(6, -1);
    REQUIRE(coinv == 2);
    CHECK(coinvariants(SigmaModule::cyclic(6, -1)) == FgAbGroup::cyclic(coinv));
}

TEST_CASE("point difference cohomology examples")
{
    auto z = point_difference_cohomology(SigmaModule::cyclic(0, 1));
    CHECK(z[0] == FgAbGroup::free(1));
    CHECK(z[1] == FgAbGroup::free(1));
    auto h = point_difference_cohomology(SigmaModule::cyclic(7, 3));
    CHECK(h[0].is_trivial());
    CHECK(h[1].is_trivial());
    SigmaModule swap(FgAbGroup::free(2), IntMatrix{{0, 1}, {1, 0}});
    auto s = point_difference_cohomology(swap);
    CHECK(s[0] == FgAbGroup::free(1));
    CHECK(s[1] == FgAbGroup::free(1));
}

TEST_CASE("property: |invariants| = |coinvariants| on random finite modules")
{
    std::mt19937_64 rng(11);
    const std::vector<FgAbGroup> pool{FgAbGroup::cyclic(12), FgAbGroup(0, {2, 4}), FgAbGroup(0, {3, 9}), FgAbGroup(0, {2, 2, 2}),
                                      FgAbGroup(0, {2, 6})};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(0, 20);
    for (int it = 0; it < 150; ++it)
    {
        const FgAbGroup G = pool[pick(rng)];
        IntMatrix M(G.dim(), G.dim());
        for (std::size_t j = 0; j < G.dim(); ++j)
            for (std::size_t i = 0; i < G.dim(); ++i)
                M(j, i) = G.modulus(j) / gcd(G.modulus(i), G.modulus(j)) * coef(rng);
        SigmaModule S(G, M);
        REQUIRE(invariants(S).order() == coinvariants(S).order());
        // abelian table: orbit count is the coinvariant order, and the identity orbit is im(s - id)
        auto T = to_finite_sigma_group(S);
        auto orbits = T.as_orbits();
        REQUIRE(Integer(orbits.size()) == coinvariants(S).order());
        std::set<std::size_t> img;
        for (std::size_t x = 0; x < T.order(); ++x)
            img.insert(G.index_of(S.twisted_difference().apply(G.element_at(x))));
        REQUIRE(std::set<std::size_t>(orbits.front().begin(), orbits.front().end()) == img);
    }
}

TEST_CASE("as_orbits examples")
{
    auto S3 = symmetric_group(3);
    auto o = S3.as_orbits();
    REQUIRE(o.size() == 3);
    std::multiset<std::size_t> sizes;
    for (const auto& c : o)
        sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
    CHECK(o.front() == std::vector<std::size_t>{S3.identity()});
    CHECK(cyclic_table(5, 1).as_orbits().size() == 5);
    CHECK(cyclic_table(5, 2).as_orbits().size() == 1);
}

TEST_CASE("finite sigma groups reject bad tables")
{
    // not associative: x*y = x - y mod 3
    std::vector<std::vector<std::size_t>> t(3, std::vector<std::size_t>(3));
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            t[x][y] = (x + 3 - y) % 3;
    CHECK_THROWS_AS(FiniteSigmaGroup({"0", "1", "2"}, t, {0, 1, 2}), InvalidInput);
    // endo not a homomorphism
    CHECK_THROWS_AS(cyclic_table(4, 1).with_endo({0, 1, 1, 3}), InvalidInput);
    CHECK_THROWS_AS(symmetric_group(3).with_endo({0, 1, 2, 3, 4, 5}).with_endo({1, 0, 2, 3, 4, 5}), InvalidInput);
}

TEST_CASE("sigma modules reject endomorphisms with the wrong carrier")
{
    CHECK_THROWS_AS(SigmaModule(FgAbGroup::cyclic(4), GroupHom::identity(FgAbGroup::cyclic(2))), InvalidInput);
}
