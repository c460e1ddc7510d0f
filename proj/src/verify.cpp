#include "tmf/verify.hpp"

#include <utility>

#include "tmf/padic.hpp"
#include "tmf/weierstrass.hpp"

namespace tmf {

namespace {

template <typename T>
T param(const Json& check, const char* key, T fallback) {
    if (check.contains(key)) return check.at(key).get<T>();
    return fallback;
}

std::vector<std::pair<long, long>> parse_pairs(const Json& check,
                                               const char* key,
                                               std::vector<std::pair<long, long>>
                                                   fallback) {
    if (!check.contains(key)) return fallback;
    std::vector<std::pair<long, long>> pairs;
    for (const Json& e : check.at(key))
        pairs.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
    return pairs;
}

// verdict + detail for one named check.
std::pair<bool, std::string> dispatch(const std::string& name,
                                      const Json& check) {
    if (name == "borcherds") {
        GramLattice g =
            builtin_lattice(param<std::string>(check, "lattice", "leech"));
        BorcherdsReport r = borcherds_check(g);
        return {r.pass, "x_k = " + format_rat(r.x_k) +
                            ", residue = " + format_rat(r.residue)};
    }
    if (name == "eq-phi") {
        GramLattice g =
            builtin_lattice(param<std::string>(check, "lattice", "e8"));
        std::size_t qprec = param<std::size_t>(check, "qprec", 4);
        ShellTable t =
            enumerate(g, 2 * (static_cast<long>(qprec) - 1));
        // Default mu: the first minimal vector.
        LatticeVector mu{t.shells.lower_bound(2)->second.front()};
        if (check.contains("mu"))
            mu.coords = check.at("mu").get<std::vector<long>>();
        Rat scale = Rat(inner(g, mu.coords, mu.coords)) / Rat(24);
        std::vector<QSeries> phi = phi_mu_from_table(g, t, mu, qprec, 2);
        QSeries rhs = theta_mu_from_table(g, t, mu, qprec).series -
                      scale * theta_from_table(g, t, qprec).series;
        bool pass = phi.size() >= 2 && phi[1] == rhs;
        return {pass, "phi^(2) vs theta_mu - (<mu,mu>/24) theta_L"};
    }
    if (name == "witten-eisenstein") {
        std::size_t qprec = param<std::size_t>(check, "qprec", 8);
        long nmax = param<long>(check, "nmax", 10);
        SeriesCharSequence seq = extract_char_sequence(
            witten_series(qprec, static_cast<std::size_t>(nmax) + 1), nmax);
        for (long n = 4; n <= nmax; n += 2)
            if (seq.entries.at(n) != eisenstein(n, qprec).series)
                return {false, "g_" + std::to_string(n) + " != G_" +
                                   std::to_string(n)};
        return {true, "g_n = G_n for even n in [4, " + std::to_string(nmax) +
                          "]"};
    }
    if (name == "kummer-ko") {
        long p = param<long>(check, "p", 5);
        long c = param<long>(check, "c", 2);
        long k = param<long>(check, "k", 0);
        long nmax = param<long>(check, "nmax", 12);
        auto pairs = parse_pairs(check, "pairs", {{4, 8}});
        RationalCharSequence b = canonical_ko_sequence(nmax);
        if (check.contains("perturb")) {
            const Json& pert = check.at("perturb");
            b.entries.at(pert.at("index").get<long>()) +=
                parse_rat(pert.at("amount").get<std::string>());
        }
        for (const auto& r : kummer_check_ko(b, p, c, k, pairs))
            if (!r.pass)
                return {false, "condition " + r.condition + " failed: " +
                                   r.detail};
        return {true, "all congruences hold"};
    }
    if (name == "kummer-tmf") {
        long p = param<long>(check, "p", 2);
        long c = param<long>(check, "c", 3);
        long k = param<long>(check, "k", 0);
        long nmax = param<long>(check, "nmax", 12);
        std::size_t prec = param<std::size_t>(check, "prec", 20);
        auto pairs = parse_pairs(check, "pairs", {{4, 8}});
        SeriesCharSequence g;
        std::map<long, long> weights;
        for (long n = 4; n <= nmax; n += 2) {
            g.entries[n] = eisenstein(n, prec).series;
            weights[n] = n;
        }
        for (const auto& r : kummer_check_tmf(g, p, c, k, pairs, weights))
            if (!r.pass)
                return {false, "condition " + r.condition + " failed: " +
                                   r.detail};
        return {true, "all congruences hold"};
    }
    if (name == "ustar") {
        std::size_t prec = param<std::size_t>(check, "prec", 60);
        for (long p : {2L, 3L, 5L})
            for (long two_k : {4L, 6L, 8L}) {
                QSeries direct = eisenstein_star(two_k, p, prec).series;
                QSeries via_star =
                    star(eisenstein(two_k, prec).series, two_k, p);
                if (direct != via_star)
                    return {false, "two G* constructions differ at p=" +
                                       std::to_string(p)};
                if (!agree_to_common_prec(atkin_U(direct, p), direct))
                    return {false, "G*|U != G* at p=" + std::to_string(p) +
                                       ", 2k=" + std::to_string(two_k)};
            }
        return {true, "G* constructions coincide and are U-fixed"};
    }
    if (name == "tau-search") {
        long bound = param<long>(check, "bound", 1000);
        std::vector<long> expected =
            param<std::vector<long>>(check, "expected", {11, 23, 691});
        std::vector<long> hits = tau_search(bound);
        Json j = hits;
        return {hits == expected, "found " + j.dump()};
    }
    throw ParseError("unknown check name: " + name);
}

}  // namespace

std::vector<CheckResult> run_suite(const Json& suite) {
    if (!suite.is_object() || !suite.contains("checks"))
        throw ParseError("suite must be an object with a \"checks\" array");
    std::vector<CheckResult> results;
    for (const Json& check : suite.at("checks")) {
        CheckResult res;
        res.name = check.value("name", "");
        res.expected = check.value("expect", "PASS");
        try {
            auto [pass, detail] = dispatch(res.name, check);
            res.verdict = pass ? "PASS" : "FAIL";
            res.detail = detail;
        } catch (const std::exception& e) {
            res.verdict = "ERROR";
            res.detail = e.what();
        }
        res.ok = res.verdict == res.expected;
        results.push_back(std::move(res));
    }
    return results;
}

Json default_suite() {
    return {{"checks",
             {{{"name", "borcherds"}, {"lattice", "leech"}},
              {{"name", "borcherds"}, {"lattice", "e8cubed"}},
              {{"name", "eq-phi"}, {"lattice", "e8"}},
              {{"name", "witten-eisenstein"}},
              {{"name", "kummer-ko"}},
              {{"name", "kummer-tmf"}},
              {{"name", "ustar"}},
              {{"name", "tau-search"}}}}};
}

Json suite_results_to_json(const std::vector<CheckResult>& results) {
    Json arr = Json::array();
    bool all_ok = true;
    for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        arr.push_back({{"name", r.name},
                       {"expected", r.expected},
                       {"verdict", r.verdict},
                       {"detail", r.detail},
                       {"ok", r.ok}});
    }
    return {{"schema", kSchemaTag},
            {"checks", std::move(arr)},
            {"all_ok", all_ok},
            {"count", results.size()}};
}

}  // namespace tmf
