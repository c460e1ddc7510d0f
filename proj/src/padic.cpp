#include "tmf/padic.hpp"

#include <algorithm>

#include "tmf/weierstrass.hpp"

namespace tmf {

namespace {

Int int_pow(long base, unsigned long e) {
    Int b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

void require_prime(long p) {
    if (p < 2 || !is_prime(p)) throw NotPrime(p);
}

// Minimum p-adic valuation over the coefficients of a series difference.
PadicValuation series_valuation(const QSeries& f, long p) {
    PadicValuation best;
    best.prime = p;
    best.infinite = true;
    for (std::size_t i = 0; i < f.prec(); ++i) {
        PadicValuation v = valuation(f[i], p);
        if (v.infinite) continue;
        if (best.infinite || v.value < best.value) best = v;
    }
    return best;
}

}  // namespace

QSeries atkin_U(const QSeries& f, long p) {
    require_prime(p);
    std::size_t n = f.prec();
    if (n == 0) return f;
    std::size_t out_prec = (n - 1) / static_cast<std::size_t>(p) + 1;
    QSeries out = QSeries::zero(out_prec);
    for (std::size_t i = 0; i < out_prec; ++i)
        out[i] = f[i * static_cast<std::size_t>(p)];
    return out;
}

QSeries versch_V(const QSeries& f, long p) {
    require_prime(p);
    std::size_t n = f.prec();
    if (n == 0) return f;
    std::size_t out_prec = static_cast<std::size_t>(p) * (n - 1) + 1;
    QSeries out = QSeries::zero(out_prec);
    for (std::size_t i = 0; i < n; ++i)
        out[i * static_cast<std::size_t>(p)] = f[i];
    return out;
}

QSeries star(const QSeries& f, long weight, long p) {
    require_prime(p);
    if (weight < 1) throw Error("star requires weight >= 1");
    Rat scale(int_pow(p, static_cast<unsigned long>(weight - 1)));
    return f - scale * versch_V(f, p);
}

Int sigma_divisor_deprived(unsigned long n, unsigned long e, long p) {
    Int s = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned long q = n / d;
        Int t;
        if (d % static_cast<unsigned long>(p) != 0) {
            mpz_ui_pow_ui(t.get_mpz_t(), d, e);
            s += t;
        }
        if (q != d && q % static_cast<unsigned long>(p) != 0) {
            mpz_ui_pow_ui(t.get_mpz_t(), q, e);
            s += t;
        }
    }
    return s;
}

ModularForm eisenstein_star(long two_k, long p, std::size_t prec) {
    require_prime(p);
    if (two_k < 2 || two_k % 2 != 0)
        throw Error("eisenstein_star weight must be even and >= 2");
    BernoulliTable B = bernoulli(static_cast<std::size_t>(two_k));
    QSeries s = QSeries::zero(prec);
    if (prec > 0) {
        Rat euler = Rat(1) - Rat(int_pow(p, static_cast<unsigned long>(
                                                two_k - 1)));
        s[0] = -euler * B[static_cast<std::size_t>(two_k)] / Rat(2 * two_k);
    }
    for (std::size_t n = 1; n < prec; ++n)
        s[n] = Rat(sigma_divisor_deprived(
            n, static_cast<unsigned long>(two_k - 1), p));
    return {two_k, std::move(s)};
}

RationalCharSequence canonical_ko_sequence(long nmax) {
    if (nmax < 2) return {};
    BernoulliTable B = bernoulli(static_cast<std::size_t>(nmax));
    RationalCharSequence b;
    for (long n = 2; n <= nmax; n += 2)
        b.entries[n] = B[static_cast<std::size_t>(n)] / Rat(2 * n);
    return b;
}

namespace {

// Shared plumbing for the two Kummer batteries.
struct KummerContext {
    long p, c, k;
    long modulus;   // m == n required mod this
    long required;  // valuation bound
    std::string pair_condition;

    KummerContext(long p_, long c_, long k_) : p(p_), c(c_), k(k_) {
        require_prime(p);
        if (k < 0) throw Error("kummer check requires k >= 0");
        if (c % p == 0)
            throw Error("c = " + std::to_string(c) +
                        " is not a p-adic unit at p = " + std::to_string(p));
        if (p == 2) {
            modulus = int_pow(2, static_cast<unsigned long>(k)).get_si();
            required = k + 2;
            pair_condition = "iii";
        } else {
            Int m = int_pow(p, static_cast<unsigned long>(k)) * Int(p - 1);
            modulus = m.get_si();
            required = k + 1;
            pair_condition = "ii";
        }
    }

    void check_pair(long m, long n) const {
        if ((m - n) % modulus != 0)
            throw PairNotCongruent(
                "pair (" + std::to_string(m) + "," + std::to_string(n) +
                ") is not congruent mod " + std::to_string(modulus));
    }

    Rat unit_factor(long n) const { return Rat(1) - Rat(int_pow(c, n)); }
};

}  // namespace

std::vector<CongruenceReport> kummer_check_ko(
    const RationalCharSequence& b, long p, long c, long k,
    const std::vector<std::pair<long, long>>& pairs) {
    KummerContext ctx(p, c, k);
    long nmax = 0;
    for (const auto& [n, bn] : b.entries) nmax = std::max(nmax, n);
    BernoulliTable B = bernoulli(static_cast<std::size_t>(std::max(nmax, 2L)));

    std::vector<CongruenceReport> reports;
    for (const auto& [n, bn] : b.entries) {
        CongruenceReport r;
        r.condition = "i";
        r.p = p;
        r.c = c;
        r.k = k;
        r.n = n;
        Rat defect = bn - B[static_cast<std::size_t>(n)] / Rat(2 * n);
        r.detail = "b_n - B_n/2n = " + format_rat(defect);
        r.pass = is_integer(defect);
        reports.push_back(std::move(r));
    }
    auto scaled = [&](long n) -> Rat {
        return ctx.unit_factor(n) *
               (Rat(1) -
                Rat(int_pow(p, static_cast<unsigned long>(n - 1)))) *
               b.entries.at(n);
    };
    for (const auto& [m, n] : pairs) {
        if (!b.entries.count(m) || !b.entries.count(n))
            throw MissingEntry("sequence entry missing for pair (" +
                               std::to_string(m) + "," + std::to_string(n) +
                               ")");
        ctx.check_pair(m, n);
        CongruenceReport r;
        r.condition = ctx.pair_condition;
        r.p = p;
        r.c = c;
        r.k = k;
        r.m = m;
        r.n = n;
        r.required = ctx.required;
        Rat diff = scaled(n) - scaled(m);
        r.val = valuation(diff, p);
        r.detail = "difference " + format_rat(diff);
        r.pass = r.val.at_least(r.required);
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<CongruenceReport> kummer_check_tmf(
    const SeriesCharSequence& g, long p, long c, long k,
    const std::vector<std::pair<long, long>>& pairs,
    const std::map<long, long>& weightmap) {
    KummerContext ctx(p, c, k);
    auto weight_of = [&](long n) {
        auto it = weightmap.find(n);
        if (it == weightmap.end())
            throw MissingEntry("weightmap entry missing for index " +
                               std::to_string(n));
        return it->second;
    };
    std::map<long, QSeries> starred;
    auto star_of = [&](long n) -> const QSeries& {
        auto it = g.entries.find(n);
        if (it == g.entries.end())
            throw MissingEntry("sequence entry missing for index " +
                               std::to_string(n));
        auto [sit, fresh] = starred.try_emplace(n);
        if (fresh) sit->second = star(it->second, weight_of(n), p);
        return sit->second;
    };

    std::vector<CongruenceReport> reports;
    for (const auto& [n, gn] : g.entries) {
        CongruenceReport r;
        r.condition = "i";
        r.p = p;
        r.c = c;
        r.k = k;
        r.n = n;
        QSeries defect = gn - eisenstein(n, gn.prec()).series;
        r.pass = true;
        for (std::size_t i = 0; i < defect.prec(); ++i)
            if (!is_integer(defect[i])) {
                r.pass = false;
                r.detail = "g_n - G_n non-integral at q^" + std::to_string(i) +
                           ": " + format_rat(defect[i]);
                break;
            }
        reports.push_back(std::move(r));
    }
    for (const auto& [m, n] : pairs) {
        ctx.check_pair(m, n);
        CongruenceReport r;
        r.condition = ctx.pair_condition;
        r.p = p;
        r.c = c;
        r.k = k;
        r.m = m;
        r.n = n;
        r.required = ctx.required;
        QSeries diff =
            ctx.unit_factor(n) * star_of(n) - ctx.unit_factor(m) * star_of(m);
        r.val = series_valuation(diff, p);
        r.pass = r.val.at_least(r.required);
        r.detail = "min coefficient valuation " + r.val.str();
        reports.push_back(std::move(r));
    }
    for (const auto& [n, gn] : g.entries) {
        CongruenceReport r;
        r.condition = "iv";
        r.p = p;
        r.c = c;
        r.k = k;
        r.n = n;
        const QSeries& gs = star_of(n);
        r.pass = agree_to_common_prec(atkin_U(gs, p), gs);
        r.detail = r.pass ? "g*|U = g* to available precision"
                          : "g*|U differs from g*";
        reports.push_back(std::move(r));
    }
    return reports;
}

BiSeries witten_series(std::size_t qprec, std::size_t zorder) {
    return sigma_expansion(qprec, zorder + 1).shift_down_z(1);
}

BiSeries ko_series(std::size_t zorder, std::size_t qprec) {
    // sinh(z/2)/(z/2) = sum_j z^{2j} / (4^j (2j+1)!), then invert.
    std::vector<QSeries> t(zorder, QSeries::zero(qprec));
    Rat coeff = 1;
    for (std::size_t j = 0; 2 * j < zorder; ++j) {
        if (j > 0)
            coeff /= Rat(4) * Rat(static_cast<long>(2 * j)) *
                     Rat(static_cast<long>(2 * j + 1));
        t[2 * j] = QSeries(coeff, qprec);
    }
    return invert_unit(BiSeries(std::move(t)));
}

SeriesCharSequence extract_char_sequence(const BiSeries& K, long nmax) {
    if (K.zorder() == 0 || K.qprec() == 0 || K[0][0] != 1)
        throw BadNormalization("z^0 q^0 coefficient of K must be 1");
    if (nmax >= static_cast<long>(K.zorder()))
        throw InsufficientPrecision("K truncated below z^" +
                                    std::to_string(nmax));
    BiSeries L = log(K);
    SeriesCharSequence out;
    Rat fact = 1;  // n!
    for (long n = 1; n <= nmax; ++n) {
        fact *= Rat(n);
        if (n % 2 == 0)
            out.entries[n] =
                (-fact / Rat(2)) * L[static_cast<std::size_t>(n)];
    }
    return out;
}

std::vector<long> tau_search(long bound) {
    if (bound < 2) throw Error("tau_search requires bound >= 2");
    std::vector<Int> tau = tau_values(static_cast<std::size_t>(bound));
    std::vector<long> hits;
    for (long p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        if (mpz_congruent_ui_p(tau[static_cast<std::size_t>(p)].get_mpz_t(),
                               1, static_cast<unsigned long>(p)))
            hits.push_back(p);
    }
    return hits;
}

Pi23Report pi23_torsion(long p) {
    require_prime(p);
    Pi23Report rep;
    rep.p = p;
    rep.tau_p = tau_values(static_cast<std::size_t>(p))[
        static_cast<std::size_t>(p)];
    if (p == 691) {
        rep.torsion_valuation = 0;
        rep.torsion_trivial = true;
        rep.description = "Z_p";
        return rep;
    }
    PadicValuation v = valuation(Rat(rep.tau_p - 1), p);
    rep.torsion_valuation = v.infinite ? 0 : v.value;
    rep.torsion_trivial = rep.torsion_valuation == 0;
    rep.description =
        rep.torsion_trivial
            ? "Z_p"
            : "Z_p + Z/p^" + std::to_string(rep.torsion_valuation);
    return rep;
}

}  // namespace tmf
