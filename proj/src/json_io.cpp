#include "tmf/json_io.hpp"

#include <fstream>

namespace tmf {

namespace {

void require_fields(const Json& j, std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    for (const char* k : keys)
        if (!j.contains(k))
            throw ParseError(std::string("missing field: ") + k);
}

}  // namespace

Json qseries_to_json(const QSeries& s) {
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < s.prec(); ++i)
        coeffs.push_back(format_rat(s[i]));
    return {{"schema", kSchemaTag},
            {"prec", s.prec()},
            {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const Json& j) {
    require_fields(j, {"prec", "coeffs"});
    std::size_t prec = j.at("prec").get<std::size_t>();
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != prec)
        throw ParseError("coeffs length does not match prec");
    std::vector<Rat> c(prec);
    for (std::size_t i = 0; i < prec; ++i)
        c[i] = parse_rat(coeffs[i].get<std::string>());
    return QSeries(std::move(c));
}

Json gram_to_json(const GramLattice& g) {
    Json rows = Json::array();
    for (const auto& row : g.gram) rows.push_back(row);
    return {{"schema", kSchemaTag}, {"dim", g.dim}, {"gram", std::move(rows)}};
}

GramLattice gram_from_json(const Json& j) {
    require_fields(j, {"dim", "gram"});
    GramLattice g;
    g.dim = j.at("dim").get<int>();
    const Json& rows = j.at("gram");
    if (!rows.is_array()) throw ParseError("gram must be an array of rows");
    for (const Json& row : rows)
        g.gram.push_back(row.get<std::vector<long>>());
    return g;
}

Json decomposition_to_json(const ModularFormDecomposition& d) {
    Json coords = Json::array();
    for (const auto& [ijk, c] : d.coords) {
        auto [i, j, k] = ijk;
        coords.push_back(
            {{"i", i}, {"j", j}, {"k", k}, {"c", format_rat(c)}});
    }
    return {{"schema", kSchemaTag},
            {"weight", d.weight},
            {"coords", std::move(coords)}};
}

ModularFormDecomposition decomposition_from_json(const Json& j) {
    require_fields(j, {"weight", "coords"});
    ModularFormDecomposition d;
    d.weight = j.at("weight").get<long>();
    for (const Json& e : j.at("coords")) {
        require_fields(e, {"i", "j", "k", "c"});
        d.coords[{e.at("i").get<int>(), e.at("j").get<int>(),
                  e.at("k").get<int>()}] =
            parse_rat(e.at("c").get<std::string>());
    }
    return d;
}

Json shell_counts_to_json(const ShellTable& t) {
    Json counts = Json::object();
    for (const auto& [nm, c] : t.counts)
        counts[std::to_string(nm)] = c.get_str();
    return {{"schema", kSchemaTag},
            {"max_norm", t.max_norm},
            {"counts", std::move(counts)}};
}

Json borcherds_to_json(const BorcherdsReport& r) {
    return {{"schema", kSchemaTag},
            {"k", r.k},
            {"x_k", format_rat(r.x_k)},
            {"residue", format_rat(r.residue)},
            {"x_k_divisible", r.x_k_divisible},
            {"residue_divisible", r.residue_divisible},
            {"paths_agree", r.paths_agree},
            {"verdict", r.pass ? "PASS" : "FAIL"}};
}

Json quadref_to_json(const QuadRefinementReport& r) {
    return {{"schema", kSchemaTag},
            {"k", r.k},
            {"norm_mu", r.norm_mu},
            {"residue_mu", format_rat(r.residue_mu)},
            {"residue_L", format_rat(r.residue_L)},
            {"main_residue_holds", r.main_residue_holds},
            {"p_mu", r.p_mu}};
}

Json congruence_reports_to_json(const std::vector<CongruenceReport>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) {
        Json e = {{"condition", r.condition},
                  {"p", r.p},
                  {"c", r.c},
                  {"k", r.k},
                  {"detail", r.detail},
                  {"verdict", r.pass ? "PASS" : "FAIL"}};
        if (r.m != 0) e["m"] = r.m;
        if (r.n != 0) e["n"] = r.n;
        if (r.required != 0) {
            e["required"] = r.required;
            e["valuation"] = r.val.str();
        }
        arr.push_back(std::move(e));
    }
    return {{"schema", kSchemaTag}, {"reports", std::move(arr)}};
}

Json image_verdict_to_json(const ImageVerdict& v) {
    Json cert = Json::array();
    for (const auto& e : v.certificate)
        cert.push_back({{"i", e.i},
                        {"j", e.j},
                        {"k", e.k},
                        {"coord", format_rat(e.coord)},
                        {"scale", e.scale.get_str()},
                        {"ok", e.ok}});
    return {{"schema", kSchemaTag},
            {"weight", v.weight},
            {"verdict", v.pass ? "PASS" : "FAIL"},
            {"certificate", std::move(cert)}};
}

Json pi23_to_json(const Pi23Report& r) {
    return {{"schema", kSchemaTag},
            {"p", r.p},
            {"tau_p", r.tau_p.get_str()},
            {"torsion_valuation", r.torsion_valuation},
            {"torsion_trivial", r.torsion_trivial},
            {"description", r.description}};
}

Json tables_to_json(const HomotopyTable& t) {
    return {{"schema", kSchemaTag},
            {"stems", t.stems},
            {"tmf", t.tmf},
            {"iso_note", t.iso_note}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace tmf
