// The ten acceptance checks, shared by `diffcoh suite` and the acceptance test binary.
#ifndef DIFFCOH_TOOLS_ACCEPTANCE_SUITE_HPP
#define DIFFCOH_TOOLS_ACCEPTANCE_SUITE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <diffcoh/cech.hpp>
#include <diffcoh/galois.hpp>
#include <diffcoh/nonabelian_cech.hpp>
#include <diffcoh/quadratic.hpp>
#include <diffcoh/simplicial.hpp>

#include "random_instances.hpp"

namespace diffcoh::acceptance
{

struct Criterion
{
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline std::string line(const Criterion& c)
{
    std::ostringstream os;
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << c.detail << " (" << std::fixed;
    os.precision(3);
    os << c.seconds << " s)";
    return os.str();
}

namespace detail
{

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// 3x3 grid triangulation of the torus, or of the Klein bottle when `twist`.
inline SimplicialComplex grid_surface(bool twist)
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
            tri.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            tri.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
        }
    return SimplicialComplex(names, tri);
}

inline std::vector<FgAbGroup> trimmed(std::vector<FgAbGroup> h)
{
    while (!h.empty() && h.back().is_trivial())
        h.pop_back();
    return h;
}

inline std::string notation(const std::vector<FgAbGroup>& h)
{
    std::string s = "(";
    for (std::size_t i = 0; i < h.size(); ++i)
        s += (i ? ", " : "") + h[i].notation();
    return s + ")";
}

inline bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// (p, m) with p^m <= limit.
inline std::vector<std::pair<int, int>> prime_powers(int limit)
{
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p <= limit; ++p)
        if (is_prime(p))
            for (int m = 1, q = p; q <= limit; ++m, q *= p)
                out.push_back({p, m});
    return out;
}

inline std::vector<std::size_t> rotation(std::size_t n, std::size_t k)
{
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = (i + k) % n;
    return v;
}

} // namespace detail

inline Criterion mapping_torus()
{
    Criterion c{1, "mapping-torus oracle"};
    const SigmaModule Zid = SigmaModule::cyclic(0, 1);
    const auto X = SimplicialComplex::polygon(3);
    auto t0 = detail::Clock::now();
    const auto klein = difference_cohomology(X, circle_degree_map(3, -1), Zid);
    const double tk = detail::since(t0);
    t0 = detail::Clock::now();
    const auto torus = difference_cohomology(X, SelfMapSpec::identity(X), Zid);
    const double tt = detail::since(t0);
    const FgAbGroup Z = FgAbGroup::free(1);
    const bool k_ok = klein == std::vector<FgAbGroup>{Z, Z, FgAbGroup::cyclic(2)};
    const bool t_ok = torus == std::vector<FgAbGroup>{Z, FgAbGroup::free(2), Z};
    // triangulated surfaces as an independent check
    const bool k_or = klein == detail::trimmed(cochain_complex(detail::grid_surface(true), Z).cohomology());
    const bool t_or = torus == detail::trimmed(cochain_complex(detail::grid_surface(false), Z).cohomology());
    c.pass = k_ok && t_ok && k_or && t_or && tk < 1.0 && tt < 1.0;
    c.detail = "Klein " + detail::notation(klein) + (k_or ? " = " : " != ") + "triangulation, torus " + detail::notation(torus) +
               (t_or ? " = " : " != ") + "triangulation";
    c.seconds = tk + tt;
    return c;
}

inline Criterion ses_suite(std::uint64_t seed, int instances = 200)
{
    Criterion c{2, "two-row SES suite"};
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(seed);
    int exact = 0, orders = 0, too_big = 0, degrees = 0;
    for (int it = 0; it < instances; ++it)
    {
        const auto B = random::finite_bicomplex(rng, 4);
        for (const auto* C : {&B.row0(), &B.row1()})
            for (std::size_t n = 0; n < C->length(); ++n)
                if (C->level(n).order() > 64)
                    ++too_big;
        const auto reps = extract_ses(B);
        degrees += static_cast<int>(reps.size());
        for (const auto& r : reps)
        {
            exact += r.exact;
            orders += r.middle.order() == r.left.order() * r.right.order();
        }
    }
    c.seconds = detail::since(t0);
    c.pass = exact == degrees && orders == degrees && too_big == 0 && c.seconds < 60.0;
    c.detail = std::to_string(instances) + " bicomplexes, " + std::to_string(exact) + "/" + std::to_string(degrees) +
               " degrees exact, " + std::to_string(orders) + "/" + std::to_string(degrees) + " with |middle| = |left|·|right|, seed " +
               std::to_string(seed);
    return c;
}

inline Criterion cech_comparison()
{
    Criterion c{3, "Čech vs derived in degrees 0 and 1"};
    const auto t0 = detail::Clock::now();
    std::vector<std::pair<SimplicialComplex, std::vector<std::size_t>>> spaces;
    for (std::size_t n = 3; n <= 6; ++n)
    {
        spaces.push_back({SimplicialComplex::polygon(n), detail::rotation(n, 1)});
        std::vector<std::size_t> refl(n);
        for (std::size_t i = 0; i < n; ++i)
            refl[i] = (n - i) % n;
        spaces.push_back({SimplicialComplex::polygon(n), refl});
    }
    spaces.push_back({SimplicialComplex::simplex(2), {1, 2, 0}});
    spaces.push_back({SimplicialComplex::simplex(2), {0, 0, 1}});
    const std::vector<SigmaModule> coeffs{SigmaModule::cyclic(0, 1), SigmaModule::cyclic(0, -1), SigmaModule::cyclic(4, 3),
                                          SigmaModule::cyclic(6, 5)};
    int total = 0, match = 0;
    for (const auto& [X, v] : spaces)
        for (const auto& A : coeffs)
        {
            const auto r = cech_to_derived_check(cech_model(CombinatorialCover(X, v), A).data,
                                                 difference_cohomology(X, SelfMapSpec::vertices(v), A));
            ++total;
            match += r.match;
        }
    c.seconds = detail::since(t0);
    c.pass = total >= 20 && match == total;
    c.detail = std::to_string(match) + "/" + std::to_string(total) + " cover/model pairs agree";
    return c;
}

inline Criterion mu2_oracle()
{
    Criterion c{4, "μ2 torsor oracle"};
    const auto t0 = detail::Clock::now();
    int total = 0, agree = 0;
    std::size_t f5 = 0;
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1}})
        for (int r = 0; r < m; ++r)
        {
            DifferenceField F(FiniteField(p, m), static_cast<std::uint64_t>(r));
            const Mu2Result res = h1_sigma_mu2(F);
            // 2·|(k*/(k*)²)^σ|: the square class group has order 2 and σ fixes it
            const std::size_t formula = 2 * res.invariant_part.order().convert_to<std::size_t>();
            ++total;
            agree += res.classes.size() == formula && res.classes.size() == res.ses_order && res.agree;
            if (p == 5 && r == 0)
                f5 = res.classes.size();
        }
    c.seconds = detail::since(t0);
    c.pass = agree == total && f5 == 4 && c.seconds < 10.0;
    c.detail = std::to_string(agree) + "/" + std::to_string(total) + " (field, Frobenius power) cases agree; (F5, id) has " +
               std::to_string(f5) + " classes";
    return c;
}

/// Compares the enumeration with cosets of im(Σ λ_j s^j); the torsor operator s^n - Σ λ_j s^j is reported alongside.
inline Criterion ga_classification(std::uint64_t seed, int instances = 60)
{
    Criterion c{5, "Ga^n torsor classification"};
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> fields;
    for (auto pm : detail::prime_powers(64))
        fields.push_back(pm);
    std::uniform_int_distribution<std::size_t> pick(0, fields.size() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    int formula = 0, torsor = 0;
    for (int it = 0; it < instances; ++it)
    {
        auto [p, m] = fields[pick(rng)];
        DifferenceField F(FiniteField(p, m), std::uniform_int_distribution<int>(0, m - 1)(rng));
        std::uniform_int_distribution<int> elt(0, static_cast<int>(F.q()) - 1);
        std::vector<int> lambdas(static_cast<std::size_t>(len(rng)));
        for (auto& l : lambdas)
            l = elt(rng);
        const auto g = classify_ga_torsors(F, lambdas);
        formula += g.formula_agrees;
        torsor += g.torsor_operator_agrees;
    }
    c.seconds = detail::since(t0);
    c.pass = formula == instances;
    c.detail = std::to_string(formula) + "/" + std::to_string(instances) + " match cosets of im(Σ λ_j s^j); " + std::to_string(torsor) +
               "/" + std::to_string(instances) + " match cosets of im(s^n - Σ λ_j s^j), seed " + std::to_string(seed);
    return c;
}

inline Criterion pic_field()
{
    Criterion c{6, "rank-one difference modules over finite fields"};
    const auto t0 = detail::Clock::now();
    int total = 0, ok = 0;
    for (auto [p, m] : detail::prime_powers(625))
        for (int r = 0; r < m; ++r)
        {
            DifferenceField F(FiniteField(p, m), static_cast<std::uint64_t>(r));
            const auto res = pic_sigma_field(F, 625);
            const std::uint64_t g = std::gcd(F.s_exponent() - 1, F.q() - 1);
            ++total;
            ok += res.agree && res.group.order() == g && res.exhaustive_classes == g;
        }
    c.seconds = detail::since(t0);
    c.pass = ok == total;
    c.detail = std::to_string(ok) + "/" + std::to_string(total) + " fields with q <= 625: |Pic_s| = gcd(p^r-1, q-1) = exhaustive count";
    return c;
}

inline Criterion linearly_closed()
{
    Criterion c{7, "Kummer solutions in extensions"};
    const auto t0 = detail::Clock::now();
    int total = 0, ok = 0;
    for (int p : {2, 3, 5})
        for (int m = 1; m <= 4; ++m)
        {
            DifferenceField F(FiniteField(p, m), 1);
            for (int rep : as_multiplicative(F).representatives)
            {
                const auto w = linearly_closed_witness(F, rep);
                ++total;
                ok += w.verified && w.degree >= 1 && w.degree <= std::max(p - 1, 1);
            }
        }
    c.seconds = detail::since(t0);
    c.pass = ok == total;
    c.detail = std::to_string(ok) + "/" + std::to_string(total) + " classes solved by x^(p-1) = rep in degree <= p-1";
    return c;
}

inline Criterion quadratic_picard()
{
    Criterion c{8, "difference Picard of quadratic rings"};
    const auto t0 = detail::Clock::now();
    bool ok = true;
    std::string detail;
    for (long long d : {-1LL, -3LL})
    {
        const auto r = difference_picard(QuadraticOrder(d));
        const bool direct = r.group == FgAbGroup::cyclic(2);
        const bool ses = r.ses_exact && r.ses_order == 2 && r.as_units.order() * r.class_invariants.order() == 2;
        ok = ok && direct && ses;
        detail += "d=" + std::to_string(d) + ": " + r.group.notation() + " (SES order " + r.ses_order.str() + "); ";
    }
    const auto r5 = difference_picard(QuadraticOrder(-5));
    const auto again = difference_picard(QuadraticOrder(-5), 7);
    ok = ok && r5.group.order() == 4 && r5.ses_exact && again.group == r5.group;
    detail += "d=-5: " + r5.group.notation() + " (rerun " + again.group.notation() + "); unit descent";
    for (long long d : {-1LL, -2LL, -3LL})
    {
        const auto p = unit_descent_report(QuadraticOrder(d));
        ok = ok && p.match;
        detail += " " + std::to_string(d) + (p.match ? ":match" : ":mismatch");
    }
    c.seconds = detail::since(t0);
    c.pass = ok && c.seconds < 30.0;
    c.detail = detail;
    return c;
}

inline Criterion nonabelian_layer(std::uint64_t seed)
{
    Criterion c{9, "nonabelian layer"};
    const auto t0 = detail::Clock::now();
    const auto S3 = symmetric_group(3);
    const std::size_t orbits = S3.as_orbits().size();
    const std::size_t point = nonabelian_h1(NonabelianCechData::from_cover(CombinatorialCover(SimplicialComplex::point(), {0}), S3)).classes.size();

    // abelian groups of order <= 16 with a handful of endomorphisms each
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(0, 15);
    std::vector<SigmaModule> mods;
    for (long long n = 1; n <= 16; ++n)
        for (long long k = 0; k < n; ++k)
            mods.push_back(SigmaModule::cyclic(n, k));
    for (const IntVector& t : std::vector<IntVector>{{2, 2}, {2, 4}, {2, 2, 2}, {3, 3}, {2, 6}, {2, 8}, {4, 4}, {2, 2, 4}, {2, 2, 2, 2}})
    {
        FgAbGroup G(0, t);
        mods.emplace_back(G, IntMatrix::identity(G.dim()));
        for (int e = 0; e < 4; ++e)
        {
            IntMatrix M(G.dim(), G.dim());
            for (std::size_t j = 0; j < G.dim(); ++j)
                for (std::size_t i = 0; i < G.dim(); ++i)
                    M(j, i) = G.modulus(j) / gcd(G.modulus(i), G.modulus(j)) * coef(rng);
            mods.emplace_back(G, M);
        }
    }
    const std::vector<std::pair<SimplicialComplex, std::vector<std::size_t>>> spaces{
        {SimplicialComplex::point(), {0}}, {SimplicialComplex::polygon(3), {1, 2, 0}}, {SimplicialComplex::polygon(3), {0, 2, 1}}};
    int total = 0, match = 0, skipped = 0;
    for (const auto& M : mods)
        for (const auto& [X, v] : spaces)
        {
            CombinatorialCover cov(X, v);
            try
            {
                const auto na = nonabelian_h1(NonabelianCechData::from_cover(cov, to_finite_sigma_group(M)));
                const auto ab = difference_cech_cohomology(cech_model(cov, M).data);
                ++total;
                match += Integer(na.classes.size()) == ab[1].order();
            }
            catch (const BoundExceeded&)
            {
                ++skipped;
            }
        }
    c.seconds = detail::since(t0);
    c.pass = orbits == 3 && point == 3 && total > 0 && match == total;
    c.detail = "S3 orbits " + std::to_string(orbits) + ", S3 point classes " + std::to_string(point) + ", " + std::to_string(match) + "/" +
               std::to_string(total) + " abelian cover instances agree (" + std::to_string(skipped) + " above the enumeration bound)";
    return c;
}

inline Criterion galois_ses(std::uint64_t seed, int instances = 120)
{
    Criterion c{10, "cyclic Galois SES"};
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(seed);
    int calls = 0, exact = 0;
    for (int it = 0; it < instances; ++it)
    {
        const auto d = random::cyclic_galois_data(rng);
        for (std::size_t n = 0; n <= 3; ++n)
        {
            const auto r = difference_galois_cohomology(d, n);
            ++calls;
            exact += r.ses.exact && r.ses.middle.order() == r.ses.left.order() * r.ses.right.order();
        }
    }
    DifferenceField F5(FiniteField(5, 1), 0);
    const auto mu = difference_galois_cohomology(mu_n_galois_data(F5, 2, 2), 1);
    const std::size_t torsors = h1_sigma_mu2(F5).classes.size();
    c.seconds = detail::since(t0);
    c.pass = exact == calls && instances >= 100 && mu.ses.exact && mu.group.order() == Integer(torsors);
    c.detail = std::to_string(exact) + "/" + std::to_string(calls) + " calls exact over " + std::to_string(instances) +
               " instances (seed " + std::to_string(seed) + "); μ2 over F25/F5 gives " + mu.group.order().str() + " vs " +
               std::to_string(torsors) + " torsor classes";
    return c;
}

/// Runs every criterion; an exception inside one criterion marks it failed.
inline std::vector<Criterion> run(std::uint64_t seed, const std::function<void(const Criterion&)>& report = {})
{
    const std::vector<std::pair<int, std::function<Criterion()>>> all{
        {1, [] { return mapping_torus(); }},
        {2, [&] { return ses_suite(seed); }},
        {3, [] { return cech_comparison(); }},
        {4, [] { return mu2_oracle(); }},
        {5, [&] { return ga_classification(seed); }},
        {6, [] { return pic_field(); }},
        {7, [] { return linearly_closed(); }},
        {8, [] { return quadratic_picard(); }},
        {9, [&] { return nonabelian_layer(seed); }},
        {10, [&] { return galois_ses(seed); }}};
    std::vector<Criterion> out;
    for (const auto& [id, f] : all)
    {
        Criterion c;
        try
        {
            c = f();
        }
        catch (const std::exception& e)
        {
            c = Criterion{id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()};
        }
        if (report)
            report(c);
        out.push_back(c);
    }
    return out;
}

} // namespace diffcoh::acceptance

#endif // DIFFCOH_TOOLS_ACCEPTANCE_SUITE_HPP
