#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tmf/modforms.hpp"
#include "tmf/padic.hpp"

using namespace tmf;

namespace {

QSeries random_series(std::mt19937& rng, std::size_t prec) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rat> c(prec);
    for (auto& x : c) x = make_rat(num(rng), den(rng));
    return QSeries(std::move(c));
}

}  // namespace

TEST_CASE("U and V coefficient action and precision rules") {
    std::vector<Rat> c = {Rat(0), Rat(1), Rat(2), Rat(3), Rat(4),
                          Rat(5), Rat(6)};
    QSeries f(c);
    QSeries u = atkin_U(f, 3);
    CHECK(u.prec() == 3);  // floor(6/3) + 1
    CHECK(u[0] == 0);
    CHECK(u[1] == 3);
    CHECK(u[2] == 6);
    QSeries v = versch_V(f, 2);
    CHECK(v.prec() == 13);  // 2*6 + 1
    CHECK(v[2] == 1);
    CHECK(v[3] == 0);
    CHECK(v[12] == 6);
    CHECK_THROWS_AS(atkin_U(f, 4), NotPrime);
    CHECK_THROWS_AS(versch_V(f, 6), NotPrime);
}

TEST_CASE("U after V is the identity on random series") {
    std::mt19937 rng(41);
    for (long p : {2L, 3L, 5L}) {
        for (int trial = 0; trial < 12; ++trial) {
            QSeries f = random_series(rng, 20);
            CHECK(atkin_U(versch_V(f, p), p) == f);
        }
    }
}

TEST_CASE("star operator definition") {
    std::mt19937 rng(43);
    QSeries f = random_series(rng, 15);
    long p = 3, weight = 4;
    QSeries s = star(f, weight, p);
    CHECK(s.prec() == 15);
    // f - p^{k-1} f|V, spot-checked coefficient-wise.
    CHECK(s[0] == f[0]);
    CHECK(s[1] == f[1]);
    CHECK(s[3] == f[3] - Rat(27) * f[1]);
    CHECK(s[9] == f[9] - Rat(27) * f[3]);
}

TEST_CASE("p-deprived divisor sums") {
    CHECK(sigma_divisor_deprived(6, 1, 2) == 1 + 3);
    CHECK(sigma_divisor_deprived(6, 1, 3) == 1 + 2);
    CHECK(sigma_divisor_deprived(6, 1, 5) == 12);
    CHECK(sigma_divisor_deprived(9, 3, 3) == 1);
}

TEST_CASE("the two G* constructions coincide and G* is U-fixed") {
    for (long p : {2L, 3L, 5L}) {
        for (long two_k : {4L, 6L, 8L}) {
            std::size_t prec = 60;
            ModularForm direct = eisenstein_star(two_k, p, prec);
            QSeries via_star = star(eisenstein(two_k, prec).series, two_k, p);
            CHECK(direct.series == via_star);
            CHECK(agree_to_common_prec(atkin_U(direct.series, p),
                                       direct.series));
        }
    }
}

TEST_CASE("canonical KO sequence is B_n/2n") {
    auto b = canonical_ko_sequence(12);
    CHECK(b.entries.at(2) == make_rat(1, 24));
    CHECK(b.entries.at(4) == make_rat(-1, 240));
    CHECK(b.entries.at(6) == make_rat(1, 504));
    CHECK(b.entries.at(12) == make_rat(-691, 65520));
    CHECK(!b.entries.contains(3));
}

TEST_CASE("KO Kummer battery passes on the canonical sequence") {
    auto b = canonical_ko_sequence(40);
    struct Config {
        long p, k;
    };
    for (auto [p, k] : {Config{2, 0}, Config{2, 2}, Config{3, 1}, Config{5, 1},
                        Config{7, 0}}) {
        long modulus = p == 2 ? 1 : p - 1;
        for (long i = 0; i < k; ++i) modulus *= p;
        std::vector<std::pair<long, long>> pairs;
        for (long n = 2; n <= 40; n += 2)
            for (long m = n + 2; m <= 40; m += 2)
                if ((m - n) % modulus == 0) pairs.push_back({n, m});
        REQUIRE(!pairs.empty());
        for (long c : {p + 1, 2 * p + 1}) {
            auto reports = kummer_check_ko(b, p, c, k, pairs);
            CHECK(!reports.empty());
            for (const auto& r : reports) {
                INFO(r.condition << " p=" << r.p << " c=" << r.c
                                 << " n=" << r.n << " m=" << r.m << " "
                                 << r.detail);
                CHECK(r.pass);
            }
        }
    }
}

TEST_CASE("a perturbed KO sequence fails with the valuation as witness") {
    auto b = canonical_ko_sequence(20);
    b.entries[8] += make_rat(1, 5);  // break 5-adic congruences at n = 8
    auto reports = kummer_check_ko(b, 5, 2, 0, {{4, 8}, {8, 12}});
    bool saw_failure = false;
    for (const auto& r : reports) {
        if (r.condition == "ii" && (r.n == 8 || r.m == 8) && !r.pass) {
            saw_failure = true;
            CHECK(!r.val.at_least(r.required));
        }
    }
    CHECK(saw_failure);
}

TEST_CASE("witten series extraction reproduces Eisenstein series") {
    auto K = witten_series(6, 10);
    CHECK(K[0][0] == 1);
    auto g = extract_char_sequence(K, 8);
    CHECK(g.entries.at(4) == eisenstein(4, 6).series);
    CHECK(g.entries.at(6) == eisenstein(6, 6).series);
    CHECK(g.entries.at(8) == eisenstein(8, 6).series);
}

TEST_CASE("extraction rejects a badly normalized series") {
    auto K = witten_series(3, 6);
    CHECK_THROWS_AS(extract_char_sequence(Rat(2) * K, 4), BadNormalization);
}

TEST_CASE("KO series yields the A-hat coefficients") {
    auto K = ko_series(8);
    auto g = extract_char_sequence(K, 6);
    QSeries b2 = g.entries.at(2);
    QSeries b4 = g.entries.at(4);
    CHECK(b2[0] == make_rat(1, 24));
    CHECK(b4[0] == make_rat(-1, 240));
}

TEST_CASE("tmf Kummer battery on the Eisenstein sequence") {
    std::size_t prec = 30;
    SeriesCharSequence g;
    std::map<long, long> weights;
    for (long n = 4; n <= 20; n += 2) {
        g.entries[n] = eisenstein(n, prec).series;
        weights[n] = n;
    }
    struct Config {
        long p, k;
        std::vector<std::pair<long, long>> pairs;
    };
    std::vector<Config> configs = {
        {2, 1, {{4, 8}, {6, 10}, {8, 12}, {4, 12}, {10, 18}}},
        {3, 1, {{4, 10}, {6, 12}, {8, 14}, {12, 18}, {4, 16}}},
        {5, 0, {{4, 8}, {6, 10}, {8, 12}, {4, 12}, {10, 18}}},
    };
    for (const auto& [p, k, pairs] : configs) {
        auto reports = kummer_check_tmf(g, p, p == 2 ? 3 : 2, k, pairs,
                                        weights);
        CHECK(!reports.empty());
        for (const auto& r : reports) {
            INFO(r.condition << " p=" << r.p << " n=" << r.n << " m=" << r.m
                             << " " << r.detail);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("a perturbed tmf sequence fails condition (i)") {
    SeriesCharSequence g;
    std::map<long, long> weights;
    for (long n = 4; n <= 8; n += 2) {
        g.entries[n] = eisenstein(n, 10).series;
        weights[n] = n;
    }
    g.entries[6] += make_rat(1, 3) * QSeries::power_of_q(1, 10);
    auto reports = kummer_check_tmf(g, 5, 2, 0, {{4, 8}}, weights);
    bool saw_failure = false;
    for (const auto& r : reports)
        if (r.condition == "i" && r.n == 6 && !r.pass) saw_failure = true;
    CHECK(saw_failure);
}

TEST_CASE("tau search and the 23-stem reports") {
    CHECK(tau_search(1000) == std::vector<long>{11, 23, 691});
    auto p5 = pi23_torsion(5);
    CHECK(p5.torsion_trivial);
    CHECK(p5.description == "Z_p");
    auto p11 = pi23_torsion(11);
    CHECK(p11.tau_p == 534612);
    CHECK(!p11.torsion_trivial);
    CHECK(p11.torsion_valuation == 1);
    auto p691 = pi23_torsion(691);
    CHECK(p691.torsion_trivial);
    CHECK_THROWS_AS(pi23_torsion(10), NotPrime);
}
