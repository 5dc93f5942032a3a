#include <catch_amalgamated.hpp>

#include <random>

#include "json_io.hpp"
#include "random_instances.hpp"

using namespace diffcoh;
using io::json;

namespace
{

FgAbGroup random_group(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> rank(0, 3), len(0, 3), mod(0, 40);
    IntVector t;
    for (int i = len(rng); i > 0; --i)
        t.push_back(mod(rng));
    IntMatrix rel(static_cast<std::size_t>(rank(rng)) + t.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        rel(rel.rows() - t.size() + i, i) = t[i];
    return cokernel(rel);
}

json reparse(const json& j) { return json::parse(j.dump()); }

} // namespace

TEST_CASE("integers are written as decimal strings and read from strings or numbers")
{
    const Integer big("123456789012345678901234567890");
    CHECK(io::to_json(big) == json("123456789012345678901234567890"));
    CHECK(io::integer_from_json(json("-42"), "x") == -42);
    CHECK(io::integer_from_json(json(17), "x") == 17);
    CHECK_THROWS_AS(io::integer_from_json(json("4a"), "x"), SchemaError);
    CHECK_THROWS_AS(io::integer_from_json(json(1.5), "x"), SchemaError);
}

TEST_CASE("groups given by any cyclic decomposition are read canonically")
{
    json j{{"free_rank", "1"}, {"torsion", {"6", "4", "1"}}};
    CHECK(io::group_from_json(j) == FgAbGroup(1, {2, 12}));
    // coordinates referenced by matrices must already be canonical
    json m{{"carrier", j}, {"endo", io::to_json(IntMatrix::identity(4))}};
    CHECK_THROWS_AS(io::sigma_module_from_json(m), SchemaError);
}

TEST_CASE("property: emitted groups, matrices and complexes re-parse to equal objects")
{
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it)
    {
        const FgAbGroup g = random_group(rng);
        REQUIRE(io::group_from_json(reparse(io::to_json(g))) == g);
        const IntMatrix M = random::matrix(rng, 1 + it % 4, it % 5, -1000, 1000);
        REQUIRE(io::matrix_from_json(reparse(io::to_json(M))) == M);
    }
    for (int it = 0; it < 40; ++it)
    {
        const auto B = random::finite_bicomplex(rng);
        const CochainComplex& C = B.row0();
        const CochainComplex back = io::complex_from_json(reparse(io::to_json(C)));
        REQUIRE(back.levels() == C.levels());
        for (std::size_t n = 0; n + 1 < C.length(); ++n)
            REQUIRE(back.diff(n).matrix() == C.diff(n).matrix());
    }
}

TEST_CASE("schema violations are reported as schema errors")
{
    CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", "2"}, {"cols", "1"}, {"entries", {{"1"}}}}), SchemaError);
    CHECK_THROWS_AS(io::complex_from_json(json{{"differentials", json::object()}}), SchemaError);
    json cx{{"levels", {{"0", io::to_json(FgAbGroup::free(1))}, {"1", io::to_json(FgAbGroup::free(1))}}}, {"differentials", json::object()}};
    CHECK_THROWS_AS(io::complex_from_json(cx), SchemaError);
    json s = json::parse(R"({"vertices": ["a", "b"], "simplices": [["a", "b"]], "sigma": {}})");
    CHECK_THROWS_WITH(io::simplicial_from_json(s), Catch::Matchers::ContainsSubstring("vertex_map"));
    s["sigma"] = json::parse(R"({"vertex_map": {"a": "b"}})");
    CHECK_THROWS_WITH(io::simplicial_from_json(s), Catch::Matchers::ContainsSubstring("every vertex"));
}

TEST_CASE("simplicial and finite-group inputs")
{
    json s = json::parse(R"({"vertices": ["a", "b", "c"], "simplices": [["a", "b"], ["b", "c"], ["a", "c"]],
                             "sigma": {"vertex_map": {"a": "b", "b": "c", "c": "a"}}})");
    const auto in = io::simplicial_from_json(s);
    CHECK(in.X.count(1) == 3);
    CHECK(*in.sigma.vertex_map == std::vector<std::size_t>{1, 2, 0});
    CHECK(difference_cohomology(in.X, in.sigma, in.coeff) == std::vector<FgAbGroup>{FgAbGroup::free(1), FgAbGroup::free(2), FgAbGroup::free(1)});
    json g = json::parse(R"({"elements": ["0", "1"], "table": [["0", "1"], ["1", "0"]], "endo": ["0", "1"]})");
    CHECK(io::finite_group_from_json(g).as_orbits().size() == 2);
    g["table"] = json::parse(R"([["0", "1"], ["1", "1"]])");
    CHECK_THROWS_AS(io::finite_group_from_json(g), InvalidInput);
}

TEST_CASE("cyclic Galois data")
{
    json d{{"N", "2"},
           {"module", io::to_json(FgAbGroup::cyclic(8))},
           {"gamma", io::to_json(IntMatrix{{3}})},
           {"sigma", io::to_json(IntMatrix{{5}})}};
    CHECK(io::cyclic_galois_from_json(d).N == 2);
    d["gamma"] = io::to_json(IntMatrix{{2}});
    CHECK_THROWS_AS(io::cyclic_galois_from_json(d), InvalidInput);
}
