// JSON encoding of groups, matrices, complexes and the input records of each
// subcommand.  Integers are written as decimal strings; reading accepts strings
// or JSON integers.
#ifndef DIFFCOH_TOOLS_JSON_IO_HPP
#define DIFFCOH_TOOLS_JSON_IO_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include <diffcoh/cech.hpp>
#include <diffcoh/galois.hpp>
#include <diffcoh/simplicial.hpp>

namespace diffcoh::io
{

using json = nlohmann::json;

inline const json& field(const json& j, const std::string& key, const std::string& ctx)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(ctx + ": missing field \"" + key + "\"");
    return j.at(key);
}

inline Integer integer_from_json(const json& j, const std::string& ctx)
{
    if (j.is_number_integer())
        return Integer(j.get<long long>());
    if (j.is_string())
    {
        const std::string s = j.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw SchemaError(ctx + ": \"" + s + "\" is not a decimal integer");
        return Integer(s);
    }
    throw SchemaError(ctx + ": expected an integer (decimal string)");
}

inline std::size_t size_from_json(const json& j, const std::string& ctx)
{
    const Integer v = integer_from_json(j, ctx);
    if (v < 0 || v > 1000000)
        throw SchemaError(ctx + ": expected a small nonnegative integer");
    return v.convert_to<std::size_t>();
}

inline json to_json(const Integer& n) { return n.str(); }

inline json to_json(const IntVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

inline IntVector vector_from_json(const json& j, const std::string& ctx)
{
    if (!j.is_array())
        throw SchemaError(ctx + ": expected an array");
    IntVector v;
    for (const auto& x : j)
        v.push_back(integer_from_json(x, ctx));
    return v;
}

// ---- matrices: { "rows", "cols", "entries" }

inline json to_json(const IntMatrix& M)
{
    json e = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i)
    {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j)
            row.push_back(to_json(M(i, j)));
        e.push_back(row);
    }
    return {{"rows", std::to_string(M.rows())}, {"cols", std::to_string(M.cols())}, {"entries", e}};
}

inline IntMatrix matrix_from_json(const json& j, const std::string& ctx = "matrix")
{
    const std::size_t r = size_from_json(field(j, "rows", ctx), ctx + ".rows");
    const std::size_t c = size_from_json(field(j, "cols", ctx), ctx + ".cols");
    const json& e = field(j, "entries", ctx);
    if (!e.is_array() || e.size() != r)
        throw SchemaError(ctx + ": entries must have " + std::to_string(r) + " rows");
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
    {
        if (!e[i].is_array() || e[i].size() != c)
            throw SchemaError(ctx + ": row " + std::to_string(i) + " must have " + std::to_string(c) + " entries");
        for (std::size_t k = 0; k < c; ++k)
            M(i, k) = integer_from_json(e[i][k], ctx);
    }
    return M;
}

// ---- groups: { "free_rank", "torsion", "notation" }

inline json to_json(const FgAbGroup& g)
{
    return {{"free_rank", std::to_string(g.free_rank())}, {"torsion", to_json(g.torsion())}, {"notation", g.notation()}};
}

/// Any presentation Z^r + ⊕ Z/t_i; the result is canonical.
inline FgAbGroup group_from_json(const json& j, const std::string& ctx = "group")
{
    const std::size_t r = j.contains("free_rank") ? size_from_json(j.at("free_rank"), ctx + ".free_rank") : 0;
    const IntVector t = j.contains("torsion") ? vector_from_json(j.at("torsion"), ctx + ".torsion") : IntVector{};
    IntMatrix rel(r + t.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        if (t[i] < 0)
            throw SchemaError(ctx + ": torsion entries must be nonnegative");
        rel(r + i, i) = t[i];
    }
    return cokernel(rel);
}

inline json to_json(const std::vector<FgAbGroup>& gs)
{
    json a = json::array();
    for (const auto& g : gs)
        a.push_back(to_json(g));
    return a;
}

// ---- sigma modules and finite groups

/// A hom between given carriers; matrices are in the carriers' canonical coordinates.
inline GroupHom hom_from_json(const json& j, const FgAbGroup& s, const FgAbGroup& t, const std::string& ctx)
{
    const IntMatrix M = matrix_from_json(j, ctx);
    if (M.rows() != t.dim() || M.cols() != s.dim())
        throw SchemaError(ctx + ": matrix shape does not match the groups");
    return GroupHom(s, t, M);
}

/// A group whose coordinates are referenced by matrices: must already be in invariant-factor form.
inline FgAbGroup coordinate_group_from_json(const json& c, const std::string& ctx)
{
    const FgAbGroup A = group_from_json(c, ctx);
    const std::size_t r = c.contains("free_rank") ? size_from_json(c.at("free_rank"), ctx) : 0;
    const IntVector t = c.contains("torsion") ? vector_from_json(c.at("torsion"), ctx) : IntVector{};
    if (A.free_rank() != r || !(A.torsion() == t))
        throw SchemaError(ctx + ": group must be in invariant-factor form (torsion entries > 1, each dividing the next)");
    return A;
}

inline SigmaModule sigma_module_from_json(const json& j, const std::string& ctx = "sigma module")
{
    const FgAbGroup A = coordinate_group_from_json(field(j, "carrier", ctx), ctx + ".carrier");
    return SigmaModule(A, hom_from_json(field(j, "endo", ctx), A, A, ctx + ".endo"));
}

inline json to_json(const SigmaModule& M) { return {{"carrier", to_json(M.carrier())}, {"endo", to_json(M.endo().matrix())}}; }

inline std::size_t label_index(const json& x, const std::vector<std::string>& labels, const std::string& ctx)
{
    if (x.is_string())
    {
        auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
        if (it != labels.end())
            return static_cast<std::size_t>(it - labels.begin());
    }
    const std::size_t k = size_from_json(x, ctx);
    if (k >= labels.size())
        throw SchemaError(ctx + ": element index out of range");
    return k;
}

inline FiniteSigmaGroup finite_group_from_json(const json& j, const std::string& ctx = "finite group")
{
    std::vector<std::string> labels;
    for (const auto& e : field(j, "elements", ctx))
        labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    const json& t = field(j, "table", ctx);
    if (!t.is_array() || t.size() != labels.size())
        throw SchemaError(ctx + ": table must be square");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : t)
    {
        if (!row.is_array() || row.size() != labels.size())
            throw SchemaError(ctx + ": table must be square");
        table.emplace_back();
        for (const auto& x : row)
            table.back().push_back(label_index(x, labels, ctx + ".table"));
    }
    std::vector<std::size_t> endo;
    for (const auto& x : field(j, "endo", ctx))
        endo.push_back(label_index(x, labels, ctx + ".endo"));
    return FiniteSigmaGroup(labels, table, endo);
}

// ---- complexes: { "levels": {"0": group}, "differentials": {"0": matrix} }

inline json to_json(const CochainComplex& C)
{
    json lv = json::object(), df = json::object();
    for (std::size_t n = 0; n < C.length(); ++n)
    {
        lv[std::to_string(n)] = to_json(C.level(n));
        if (n + 1 < C.length())
            df[std::to_string(n)] = to_json(C.diff(n).matrix());
    }
    return {{"levels", lv}, {"differentials", df}};
}

inline std::vector<json> indexed(const json& j, const std::string& ctx)
{
    if (j.is_array())
        return std::vector<json>(j.begin(), j.end());
    if (!j.is_object())
        throw SchemaError(ctx + ": expected an object keyed by degree");
    std::vector<json> out(j.size());
    for (auto it = j.begin(); it != j.end(); ++it)
    {
        const std::size_t n = size_from_json(json(it.key()), ctx + " key");
        if (n >= out.size())
            throw SchemaError(ctx + ": degrees must be 0.." + std::to_string(out.size() - 1));
        out[n] = it.value();
    }
    return out;
}

inline CochainComplex complex_from_json(const json& j, const std::string& ctx = "complex")
{
    std::vector<FgAbGroup> levels;
    for (const auto& g : indexed(field(j, "levels", ctx), ctx + ".levels"))
        levels.push_back(coordinate_group_from_json(g, ctx + ".levels"));
    std::vector<GroupHom> d;
    const auto diffs = j.contains("differentials") ? indexed(j.at("differentials"), ctx + ".differentials") : std::vector<json>{};
    if (!levels.empty() && diffs.size() != levels.size() - 1)
        throw SchemaError(ctx + ": need one differential between consecutive levels");
    for (std::size_t n = 0; n < diffs.size(); ++n)
        d.push_back(hom_from_json(diffs[n], levels[n], levels[n + 1], ctx + ".differentials." + std::to_string(n)));
    return CochainComplex(levels, d);
}

inline ChainMap chain_map_from_json(const json& j, const CochainComplex& s, const CochainComplex& t, const std::string& ctx)
{
    const auto comps = indexed(j, ctx);
    std::vector<GroupHom> h;
    for (std::size_t n = 0; n < std::max(s.length(), t.length()); ++n)
    {
        if (n >= comps.size())
            throw SchemaError(ctx + ": missing component " + std::to_string(n));
        h.push_back(hom_from_json(comps[n], s.level(n), t.level(n), ctx + "." + std::to_string(n)));
    }
    return ChainMap(s, t, h);
}

/// Row 0 is either "row0" or the top-level complex fields.
inline TwoRowBicomplex bicomplex_from_json(const json& j, const std::string& ctx = "bicomplex")
{
    const CochainComplex r0 = complex_from_json(j.contains("row0") ? j.at("row0") : j, ctx + ".row0");
    const CochainComplex r1 = complex_from_json(field(j, "row1", ctx), ctx + ".row1");
    return TwoRowBicomplex(chain_map_from_json(field(j, "vertical", ctx), r0, r1, ctx + ".vertical"));
}

inline json to_json(const SesReport& r)
{
    return {{"degree", std::to_string(r.degree)}, {"left", to_json(r.left)},   {"middle", to_json(r.middle)},
            {"right", to_json(r.right)},         {"inject", to_json(r.inject.matrix())}, {"surject", to_json(r.surject.matrix())},
            {"exact", r.exact}};
}

// ---- simplicial input

struct SimplicialInput
{
    SimplicialComplex X;
    SelfMapSpec sigma;
    SigmaModule coeff;
};

inline SimplicialComplex complex_of_simplices(const json& j, const std::string& ctx)
{
    std::vector<std::string> names;
    for (const auto& v : field(j, "vertices", ctx))
        names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<Simplex> simplices;
    for (const auto& s : field(j, "simplices", ctx))
    {
        if (!s.is_array())
            throw SchemaError(ctx + ": simplices must be arrays of vertices");
        Simplex t;
        for (const auto& v : s)
            t.push_back(label_index(v, names, ctx + ".simplices"));
        simplices.push_back(t);
    }
    return SimplicialComplex(names, simplices);
}

inline std::vector<std::size_t> vertex_map_from_json(const json& j, const std::vector<std::string>& names, const std::string& ctx)
{
    std::vector<std::size_t> v(names.size());
    if (j.is_array())
    {
        if (j.size() != names.size())
            throw SchemaError(ctx + ": vertex_map must list an image for every vertex");
        for (std::size_t i = 0; i < names.size(); ++i)
            v[i] = label_index(j[i], names, ctx);
        return v;
    }
    if (!j.is_object() || j.size() != names.size())
        throw SchemaError(ctx + ": vertex_map must map every vertex");
    for (std::size_t i = 0; i < names.size(); ++i)
        v[i] = label_index(field(j, names[i], ctx), names, ctx);
    return v;
}

inline SimplicialInput simplicial_from_json(const json& j, const std::string& ctx = "simplicial")
{
    SimplicialInput in{complex_of_simplices(j, ctx), {}, {}};
    const json& s = field(j, "sigma", ctx);
    if (s.contains("vertex_map"))
        in.sigma = SelfMapSpec::vertices(vertex_map_from_json(s.at("vertex_map"), in.X.vertices(), ctx + ".sigma.vertex_map"));
    else if (s.contains("chain_selfmap"))
    {
        std::vector<IntMatrix> m;
        for (const auto& x : indexed(s.at("chain_selfmap"), ctx + ".sigma.chain_selfmap"))
            m.push_back(matrix_from_json(x, ctx + ".sigma.chain_selfmap"));
        in.sigma = SelfMapSpec::chain(m);
    }
    else
        throw SchemaError(ctx + ".sigma: need \"vertex_map\" or \"chain_selfmap\"");
    in.coeff = j.contains("coefficients") ? sigma_module_from_json(j.at("coefficients"), ctx + ".coefficients")
                                          : SigmaModule::cyclic(0, 1);
    return in;
}

// ---- Čech input: explicit presheaf data, or a vertex-star cover of a simplicial complex

inline CoverPresheafData cover_data_from_json(const json& j, const std::string& ctx = "cech")
{
    const CochainComplex U = complex_from_json(field(j, "nerve_U", ctx), ctx + ".nerve_U");
    const CochainComplex V = complex_from_json(field(j, "nerve_V", ctx), ctx + ".nerve_V");
    return CoverPresheafData(U, V, chain_map_from_json(field(j, "res", ctx), U, V, ctx + ".res"),
                             chain_map_from_json(field(j, "sigma_check", ctx), U, V, ctx + ".sigma_check"));
}

// ---- cyclic Galois data: { "N", "module", "gamma", "sigma" }

inline CyclicGaloisData cyclic_galois_from_json(const json& j, const std::string& ctx = "cyclic galois data")
{
    const std::size_t N = size_from_json(field(j, "N", ctx), ctx + ".N");
    const FgAbGroup M = coordinate_group_from_json(field(j, "module", ctx), ctx + ".module");
    return CyclicGaloisData(N, M, hom_from_json(field(j, "gamma", ctx), M, M, ctx + ".gamma"),
                            hom_from_json(field(j, "sigma", ctx), M, M, ctx + ".sigma"));
}

} // namespace diffcoh::io

#endif // DIFFCOH_TOOLS_JSON_IO_HPP
