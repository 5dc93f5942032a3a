#include <catch_amalgamated.hpp>

#include <random>

#include <diffcoh/simplicial.hpp>

using namespace diffcoh;

namespace
{

FgAbGroup Z() { return FgAbGroup::free(1); }
SigmaModule Zid() { return SigmaModule::cyclic(0, 1); }

/// 3x3 grid triangulation of the torus, or of the Klein bottle when `twist`.
SimplicialComplex grid_surface(bool twist)
{
    auto v = [&](std::size_t i, std::size_t j) {
        if (i == 3)
        {
            i = 0;
            if (twist)
                j = (3 - j % 3) % 3;
        }
        return 3 * i + j % 3;
    };
    std::vector<std::string> names;
    for (int k = 0; k < 9; ++k)
        names.push_back(std::to_string(k));
    std::vector<Simplex> tri;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
        {
            Simplex a{v(i, j), v(i + 1, j), v(i + 1, j + 1)}, b{v(i, j), v(i, j + 1), v(i + 1, j + 1)};
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            tri.push_back(a);
            tri.push_back(b);
        }
    return SimplicialComplex(names, tri);
}

std::vector<FgAbGroup> trimmed(std::vector<FgAbGroup> h)
{
    while (!h.empty() && h.back().is_trivial())
        h.pop_back();
    return h;
}

} // namespace

TEST_CASE("grid oracles triangulate the torus and the Klein bottle")
{
    auto T = grid_surface(false), K = grid_surface(true);
    for (const auto* X : {&T, &K})
    {
        REQUIRE(X->count(0) == 9);
        REQUIRE(X->count(2) == 18);
        REQUIRE(X->count(0) + X->count(2) == X->count(1)); // Euler characteristic 0
    }
    CHECK(cochain_complex(T, Z()).cohomology() == std::vector<FgAbGroup>{Z(), FgAbGroup::free(2), Z()});
    CHECK(cochain_complex(K, Z()).cohomology() == std::vector<FgAbGroup>{Z(), Z(), FgAbGroup::cyclic(2)});
}

TEST_CASE("cochain complex examples")
{
    CHECK(cochain_complex(SimplicialComplex::point(), Z()).cohomology() == std::vector<FgAbGroup>{Z()});
    CHECK(cochain_complex(SimplicialComplex::polygon(3), Z()).cohomology() == std::vector<FgAbGroup>{Z(), Z()});
    auto disk = cochain_complex(SimplicialComplex::simplex(2), FgAbGroup::cyclic(4)).cohomology();
    CHECK(disk == std::vector<FgAbGroup>{FgAbGroup::cyclic(4), FgAbGroup(), FgAbGroup()});
    // boundary of the 3-simplex is a sphere
    std::vector<Simplex> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    SimplicialComplex S2({"a", "b", "c", "d"}, faces);
    CHECK(trimmed(cochain_complex(S2, Z()).cohomology()) == std::vector<FgAbGroup>{Z(), FgAbGroup(), Z()});
}

TEST_CASE("faces are added unless closure is required")
{
    SimplicialComplex X({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(X.count(1) == 3);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b", "c"}, {{0, 1, 2}}, true), InvalidInput);
}

TEST_CASE("mapping torus examples match the grid oracles")
{
    auto K = trimmed(cochain_complex(grid_surface(true), Z()).cohomology());
    auto T = trimmed(cochain_complex(grid_surface(false), Z()).cohomology());
    for (std::size_t n : {3, 4, 5})
    {
        CHECK(difference_cohomology(SimplicialComplex::polygon(n), circle_degree_map(n, -1), Zid()) == K);
        CHECK(difference_cohomology(SimplicialComplex::polygon(n), SelfMapSpec::identity(SimplicialComplex::polygon(n)), Zid()) ==
              T);
        CHECK(difference_cohomology(SimplicialComplex::polygon(n), circle_degree_map(n, 2), Zid()) ==
              std::vector<FgAbGroup>{Z(), Z(), FgAbGroup()});
    }
    // the reflection i -> -i is a simplicial degree -1 map
    std::vector<std::size_t> refl{0, 4, 3, 2, 1};
    CHECK(difference_cohomology(SimplicialComplex::polygon(5), SelfMapSpec::vertices(refl), Zid()) == K);
    auto P = difference_cohomology(SimplicialComplex::point(), SelfMapSpec::identity(SimplicialComplex::point()), Zid());
    CHECK(P == std::vector<FgAbGroup>{Z(), Z()});
}

TEST_CASE("difference SES report examples")
{
    auto pt = difference_ses_report(SimplicialComplex::point(), SelfMapSpec::identity(SimplicialComplex::point()), SigmaModule::cyclic(5, 2));
    for (const auto& r : pt)
    {
        CHECK(r.exact);
        CHECK(r.middle.is_trivial());
    }
    auto C = SimplicialComplex::polygon(4);
    auto rot = difference_ses_report(C, SelfMapSpec::vertices({1, 2, 3, 0}), Zid());
    CHECK(rot[1].exact);
    CHECK(rot[1].left == Z());
    CHECK(rot[1].right == Z());
    CHECK(rot[1].middle == FgAbGroup::free(2));
    auto kl = difference_ses_report(C, circle_degree_map(4, -1), Zid());
    CHECK(kl[2].exact);
    CHECK(kl[2].left == FgAbGroup::cyclic(2));
    CHECK(kl[2].right.is_trivial());
}

TEST_CASE("property: rotations give the same difference cohomology as the identity")
{
    const std::vector<SigmaModule> coeffs{Zid(), SigmaModule::cyclic(0, -1), SigmaModule::cyclic(6, 5), SigmaModule::cyclic(4, 3)};
    for (std::size_t n = 3; n <= 6; ++n)
    {
        auto X = SimplicialComplex::polygon(n);
        for (const auto& A : coeffs)
        {
            auto base = difference_cohomology(X, SelfMapSpec::identity(X), A);
            for (std::size_t k = 1; k < n; ++k)
            {
                std::vector<std::size_t> v(n);
                for (std::size_t i = 0; i < n; ++i)
                    v[i] = (i + k) % n;
                REQUIRE(difference_cohomology(X, SelfMapSpec::vertices(v), A) == base);
            }
        }
    }
}

TEST_CASE("property: σ = id and f = id splits as H^n ⊕ H^{n-1}")
{
    std::vector<SimplicialComplex> spaces{SimplicialComplex::point(), SimplicialComplex::polygon(4), SimplicialComplex::simplex(2),
                                          grid_surface(true)};
    for (const auto& X : spaces)
        for (const Integer n : {Integer(0), Integer(2), Integer(6)})
        {
            FgAbGroup A = FgAbGroup::cyclic(n);
            auto h = cochain_complex(X, A).cohomology();
            auto d = difference_cohomology(X, SelfMapSpec::identity(X), SigmaModule(A, GroupHom::identity(A)));
            for (std::size_t k = 0; k < d.size(); ++k)
            {
                FgAbGroup hk = k < h.size() ? h[k] : FgAbGroup();
                FgAbGroup hk1 = k > 0 && k - 1 < h.size() ? h[k - 1] : FgAbGroup();
                REQUIRE(d[k] == direct_sum(hk, hk1).group);
            }
        }
}

TEST_CASE("property: finite coefficients give |H^n_σ| = |coker| · |ker| on every instance")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> mult(0, 11);
    for (std::size_t n = 3; n <= 5; ++n)
    {
        auto X = SimplicialComplex::polygon(n);
        for (long long d : {-2LL, -1LL, 0LL, 1LL, 3LL})
            for (int it = 0; it < 3; ++it)
            {
                const long long mod = 2 + mult(rng) % 7;
                auto reps = difference_ses_report(X, circle_degree_map(n, d), SigmaModule::cyclic(mod, mult(rng)));
                for (const auto& r : reps)
                {
                    REQUIRE(r.exact);
                    REQUIRE(r.middle.order() == r.left.order() * r.right.order());
                }
            }
    }
}

TEST_CASE("invalid self maps are rejected")
{
    auto X = SimplicialComplex::polygon(4);
    CHECK_THROWS_AS(difference_cohomology(X, SelfMapSpec::vertices({0, 2, 1, 3}), Zid()), InvalidInput); // sends edge 01 to 02
    CHECK_THROWS_AS(difference_cohomology(X, SelfMapSpec::chain({IntMatrix::identity(4), IntMatrix(4, 4)}), Zid()), InvalidInput);
    CHECK_THROWS_AS(difference_cohomology(X, SelfMapSpec::chain({IntMatrix::identity(4)}), Zid()), InvalidInput);
}
