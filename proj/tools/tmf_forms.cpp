// Command-line front end: exact q-series, modular forms, lattice theta
// functions, p-adic congruence checks, and batch verification.
//
// Exit codes: 0 success / all checks PASS, 1 input or usage error,
// 2 a congruence check FAILED.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmf/json_io.hpp"
#include "tmf/padic.hpp"
#include "tmf/verify.hpp"
#include "tmf/weierstrass.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCheckFailed = 2;

void emit(const tmf::Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

// "4:8,6:10" -> {(4,8), (6,10)}
std::vector<std::pair<long, long>> parse_pair_list(const std::string& s) {
    std::vector<std::pair<long, long>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw tmf::ParseError("pair must be m:n, got " + item);
        out.emplace_back(std::stol(item.substr(0, colon)),
                         std::stol(item.substr(colon + 1)));
    }
    return out;
}

tmf::GramLattice resolve_lattice(const std::string& builtin,
                                 const std::string& gram_file) {
    if (!builtin.empty()) return tmf::builtin_lattice(builtin);
    if (!gram_file.empty()) {
        tmf::GramLattice g =
            tmf::gram_from_json(tmf::load_json_file(gram_file));
        tmf::validate(g);
        return g;
    }
    throw tmf::ParseError("provide --builtin or --gram");
}

tmf::QSeries load_series(const std::string& path) {
    return tmf::qseries_from_json(tmf::load_json_file(path));
}

tmf::Json biseries_to_json(const tmf::BiSeries& b) {
    tmf::Json terms = tmf::Json::array();
    for (const auto& t : b.terms()) terms.push_back(tmf::qseries_to_json(t));
    return {{"schema", tmf::kSchemaTag},
            {"zorder", b.zorder()},
            {"qprec", b.qprec()},
            {"terms", std::move(terms)}};
}

tmf::Json curve_json(const tmf::Curve& c) {
    return {{"a1", tmf::format_rat(c.a1)},
            {"a2", tmf::format_rat(c.a2)},
            {"a3", tmf::format_rat(c.a3)},
            {"a4", tmf::format_rat(c.a4)},
            {"a6", tmf::format_rat(c.a6)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for modular forms, even unimodular "
                 "lattices, and p-adic congruences"};
    app.require_subcommand(1);
    long seed = 0;
    app.add_option("--seed", seed, "Seed for randomized subcommands")
        ->capture_default_str();

    // --- modular forms -------------------------------------------------
    std::string which = "c4";
    std::size_t prec = 10;
    auto* cmd_gen = app.add_subcommand("generator", "q-expansion of c4, c6, "
                                                    "or delta");
    cmd_gen->add_option("--which", which, "c4|c6|delta")->required();
    cmd_gen->add_option("--prec", prec, "number of q-coefficients");

    long weight = 4;
    auto* cmd_eis =
        app.add_subcommand("eisenstein", "q-expansion of G_2k");
    cmd_eis->add_option("--weight", weight, "even weight 2k")->required();
    cmd_eis->add_option("--prec", prec, "number of q-coefficients");

    std::string series_file;
    auto* cmd_dec = app.add_subcommand(
        "decompose", "coordinates in the c4/c6/delta monomial basis");
    cmd_dec->add_option("--weight", weight, "weight of the form")->required();
    cmd_dec->add_option("--series", series_file, "QSeries JSON file")
        ->required();

    long res_k = 1;
    auto* cmd_res = app.add_subcommand(
        "residue", "res_{q=0} f/Delta^k dq/q from a q-expansion");
    cmd_res->add_option("--k", res_k, "power of Delta")->required();
    cmd_res->add_option("--series", series_file, "QSeries JSON file")
        ->required();

    // --- lattices ------------------------------------------------------
    std::string builtin, gram_file, mu_str;
    unsigned long budget = tmf::kDefaultEnumerationBudget;
    long max_norm = 4;

    auto add_lattice_opts = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", builtin,
                        "e8|d16plus|e8cubed|leech");
        cmd->add_option("--gram", gram_file, "Gram matrix JSON file");
        cmd->add_option("--budget", budget,
                        "enumeration representative ceiling");
    };

    auto* cmd_shells =
        app.add_subcommand("shells", "vector counts by norm");
    add_lattice_opts(cmd_shells);
    cmd_shells->add_option("--max-norm", max_norm, "largest norm");

    auto* cmd_theta = app.add_subcommand("theta", "theta series of a "
                                                  "lattice");
    add_lattice_opts(cmd_theta);
    cmd_theta->add_option("--prec", prec, "number of q-coefficients");

    auto* cmd_bor = app.add_subcommand(
        "borcherds", "mod-24 congruence on the Delta^k coordinate");
    add_lattice_opts(cmd_bor);

    auto* cmd_quad = app.add_subcommand(
        "quadref", "quadratic refinement p(mu) and the residue identity");
    add_lattice_opts(cmd_quad);
    cmd_quad->add_option("--mu", mu_str, "comma-separated coordinates")
        ->required();

    // --- p-adic operators ----------------------------------------------
    long p = 2, c_unit = 3, kummer_k = 0, nmax = 12, bound = 1000;
    std::string pairs_str = "4:8";
    std::size_t qprec = 8, zorder = 12;

    auto* cmd_atkin = app.add_subcommand("atkin", "f|U = sum a_{pn} q^n");
    cmd_atkin->add_option("--p", p, "prime")->required();
    cmd_atkin->add_option("--in", series_file, "QSeries JSON file")
        ->required();

    auto* cmd_star =
        app.add_subcommand("star", "f* = f - p^{k-1} f|V");
    cmd_star->add_option("--p", p, "prime")->required();
    cmd_star->add_option("--weight", weight, "weight k")->required();
    cmd_star->add_option("--in", series_file, "QSeries JSON file")
        ->required();

    auto* cmd_kko = app.add_subcommand(
        "kummer-ko", "Kummer congruences for b_n = B_n/2n");
    cmd_kko->add_option("--p", p, "prime")->required();
    cmd_kko->add_option("--c", c_unit, "p-adic unit")->required();
    cmd_kko->add_option("--k", kummer_k, "congruence depth");
    cmd_kko->add_option("--pairs", pairs_str, "pairs m:n, comma-separated");
    cmd_kko->add_option("--nmax", nmax, "largest sequence index");

    auto* cmd_ktmf = app.add_subcommand(
        "kummer-tmf", "Kummer congruences for the Eisenstein sequence");
    cmd_ktmf->add_option("--p", p, "prime")->required();
    cmd_ktmf->add_option("--c", c_unit, "p-adic unit")->required();
    cmd_ktmf->add_option("--k", kummer_k, "congruence depth");
    cmd_ktmf->add_option("--pairs", pairs_str, "pairs m:n, comma-separated");
    cmd_ktmf->add_option("--nmax", nmax, "largest sequence index");
    cmd_ktmf->add_option("--prec", prec, "q-precision of each entry");

    auto* cmd_wit = app.add_subcommand(
        "witten", "characteristic series sigma(q,e^z)/z");
    cmd_wit->add_option("--qprec", qprec, "q-precision");
    cmd_wit->add_option("--zorder", zorder, "number of z-terms");

    auto* cmd_tau = app.add_subcommand(
        "tau-search", "primes with tau(p) = 1 mod p");
    cmd_tau->add_option("--bound", bound, "upper bound on p");

    auto* cmd_pi23 = app.add_subcommand(
        "pi23", "23-stem torsion at p from tau(p) - 1");
    cmd_pi23->add_option("--p", p, "prime")->required();

    // --- tmf image -----------------------------------------------------
    auto* cmd_img = app.add_subcommand(
        "tmf-image", "scaled monomial basis of the image in weight W");
    cmd_img->add_option("--weight", weight, "even weight")->required();

    auto* cmd_mem = app.add_subcommand(
        "tmf-member", "membership of a q-expansion in the image");
    cmd_mem->add_option("--weight", weight, "weight of the form")
        ->required();
    cmd_mem->add_option("--series", series_file, "QSeries JSON file")
        ->required();

    std::string table_which = "both";
    auto* cmd_tab = app.add_subcommand("tables", "reference homotopy tables");
    cmd_tab->add_option("--which", table_which, "stems|tmf|both");

    // --- Weierstrass curves --------------------------------------------
    std::vector<std::string> curve_coeffs;
    std::string by_str;
    auto* cmd_inv = app.add_subcommand(
        "invariants", "b-, c-invariants, discriminant, j");
    cmd_inv->add_option("coeffs", curve_coeffs, "a1 a2 a3 a4 a6")
        ->expected(5);

    auto* cmd_tr = app.add_subcommand(
        "transform", "coordinate change of a Weierstrass equation");
    cmd_tr->add_option("coeffs", curve_coeffs, "a1 a2 a3 a4 a6")
        ->expected(5);
    cmd_tr->add_option("--by", by_str, "lambda,r,s,t")->required();

    // --- batch verification --------------------------------------------
    std::string suite_file;
    auto* cmd_ver = app.add_subcommand(
        "verify", "run a verification suite (default: built-in)");
    cmd_ver->add_option("--suite", suite_file, "suite JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_gen) {
            emit(tmf::qseries_to_json(
                tmf::generator_q(tmf::parse_generator(which), prec).series));
        } else if (*cmd_eis) {
            emit(tmf::qseries_to_json(
                tmf::eisenstein(weight, prec).series));
        } else if (*cmd_dec) {
            tmf::ModularForm f{weight, load_series(series_file)};
            emit(tmf::decomposition_to_json(tmf::decompose(f)));
        } else if (*cmd_res) {
            tmf::ModularForm f{12 * res_k, load_series(series_file)};
            emit({{"schema", tmf::kSchemaTag},
                  {"k", res_k},
                  {"residue",
                   tmf::format_rat(tmf::residue_delta(f, res_k))}});
        } else if (*cmd_shells) {
            emit(tmf::shell_counts_to_json(tmf::enumerate(
                resolve_lattice(builtin, gram_file), max_norm, budget)));
        } else if (*cmd_theta) {
            tmf::ModularForm f =
                tmf::theta(resolve_lattice(builtin, gram_file), prec, budget);
            tmf::Json j = tmf::qseries_to_json(f.series);
            j["weight"] = f.weight;
            emit(j);
        } else if (*cmd_bor) {
            tmf::BorcherdsReport r = tmf::borcherds_check(
                resolve_lattice(builtin, gram_file), budget);
            emit(tmf::borcherds_to_json(r));
            if (!r.pass) return kExitCheckFailed;
        } else if (*cmd_quad) {
            tmf::QuadRefinementReport r = tmf::quad_refinement(
                resolve_lattice(builtin, gram_file),
                {parse_long_list(mu_str)}, budget);
            emit(tmf::quadref_to_json(r));
            if (!r.main_residue_holds) return kExitCheckFailed;
        } else if (*cmd_atkin) {
            emit(tmf::qseries_to_json(
                tmf::atkin_U(load_series(series_file), p)));
        } else if (*cmd_star) {
            emit(tmf::qseries_to_json(
                tmf::star(load_series(series_file), weight, p)));
        } else if (*cmd_kko) {
            auto reports = tmf::kummer_check_ko(
                tmf::canonical_ko_sequence(nmax), p, c_unit, kummer_k,
                parse_pair_list(pairs_str));
            emit(tmf::congruence_reports_to_json(reports));
            for (const auto& r : reports)
                if (!r.pass) return kExitCheckFailed;
        } else if (*cmd_ktmf) {
            tmf::SeriesCharSequence g;
            std::map<long, long> weights;
            for (long n = 4; n <= nmax; n += 2) {
                g.entries[n] = tmf::eisenstein(n, prec).series;
                weights[n] = n;
            }
            auto reports = tmf::kummer_check_tmf(
                g, p, c_unit, kummer_k, parse_pair_list(pairs_str), weights);
            emit(tmf::congruence_reports_to_json(reports));
            for (const auto& r : reports)
                if (!r.pass) return kExitCheckFailed;
        } else if (*cmd_wit) {
            emit(biseries_to_json(tmf::witten_series(qprec, zorder)));
        } else if (*cmd_tau) {
            emit({{"schema", tmf::kSchemaTag},
                  {"bound", bound},
                  {"primes", tmf::tau_search(bound)}});
        } else if (*cmd_pi23) {
            emit(tmf::pi23_to_json(tmf::pi23_torsion(p)));
        } else if (*cmd_img) {
            tmf::Json basis = tmf::Json::array();
            for (const auto& e : tmf::image_basis(weight))
                basis.push_back({{"i", e.i},
                                 {"j", e.j},
                                 {"k", e.k},
                                 {"scale", e.scale.get_str()}});
            emit({{"schema", tmf::kSchemaTag},
                  {"weight", weight},
                  {"basis", std::move(basis)}});
        } else if (*cmd_mem) {
            tmf::ModularForm f{weight, load_series(series_file)};
            tmf::ImageVerdict v = tmf::in_image(f);
            emit(tmf::image_verdict_to_json(v));
            if (!v.pass) return kExitCheckFailed;
        } else if (*cmd_tab) {
            tmf::HomotopyTable t = tmf::reference_tables();
            tmf::Json j = tmf::tables_to_json(t);
            if (table_which == "stems") j.erase("tmf");
            else if (table_which == "tmf") j.erase("stems");
            else if (table_which != "both")
                throw tmf::ParseError("--which must be stems|tmf|both");
            emit(j);
        } else if (*cmd_inv) {
            tmf::Curve c{tmf::parse_rat(curve_coeffs[0]),
                         tmf::parse_rat(curve_coeffs[1]),
                         tmf::parse_rat(curve_coeffs[2]),
                         tmf::parse_rat(curve_coeffs[3]),
                         tmf::parse_rat(curve_coeffs[4])};
            tmf::CurveInvariants<tmf::Rat> inv = tmf::invariants(c);
            tmf::Json j = {{"schema", tmf::kSchemaTag},
                           {"b2", tmf::format_rat(inv.b2)},
                           {"b4", tmf::format_rat(inv.b4)},
                           {"b6", tmf::format_rat(inv.b6)},
                           {"b8", tmf::format_rat(inv.b8)},
                           {"c4", tmf::format_rat(inv.c4)},
                           {"c6", tmf::format_rat(inv.c6)},
                           {"delta", tmf::format_rat(inv.delta)}};
            j["j"] = inv.j ? tmf::Json(tmf::format_rat(*inv.j))
                           : tmf::Json();
            emit(j);
        } else if (*cmd_tr) {
            tmf::Curve c{tmf::parse_rat(curve_coeffs[0]),
                         tmf::parse_rat(curve_coeffs[1]),
                         tmf::parse_rat(curve_coeffs[2]),
                         tmf::parse_rat(curve_coeffs[3]),
                         tmf::parse_rat(curve_coeffs[4])};
            std::stringstream ss(by_str);
            std::string item;
            std::vector<tmf::Rat> parts;
            while (std::getline(ss, item, ','))
                parts.push_back(tmf::parse_rat(item));
            if (parts.size() != 4)
                throw tmf::ParseError("--by needs lambda,r,s,t");
            tmf::Transformation g{parts[0], parts[1], parts[2], parts[3]};
            emit(curve_json(tmf::transform(c, g)));
        } else if (*cmd_ver) {
            tmf::Json suite = suite_file.empty()
                                  ? tmf::default_suite()
                                  : tmf::load_json_file(suite_file);
            if (suite.at("checks").empty())
                std::cerr << "warning: empty suite, vacuously PASS\n";
            auto results = tmf::run_suite(suite);
            emit(tmf::suite_results_to_json(results));
            for (const auto& r : results)
                if (!r.ok) return kExitCheckFailed;
        }
    } catch (const tmf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
