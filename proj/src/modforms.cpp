#include "tmf/modforms.hpp"

#include <algorithm>

namespace tmf {

BernoulliTable bernoulli(std::size_t nmax) {
    // invert (e^x - 1)/x = sum_{n} x^n/(n+1)!
    std::size_t prec = nmax + 1;
    std::vector<Rat> e(prec);
    Rat fact = 1;
    for (std::size_t n = 0; n < prec; ++n) {
        fact *= Rat(static_cast<long>(n + 1));
        e[n] = 1 / fact;
    }
    QSeries inv = invert_unit(QSeries(std::move(e)));
    BernoulliTable t;
    t.values.resize(prec);
    Rat nfact = 1;
    for (std::size_t n = 0; n < prec; ++n) {
        if (n > 0) nfact *= Rat(static_cast<long>(n));
        t.values[n] = nfact * inv[n];
    }
    return t;
}

Int sigma_divisor(unsigned long n, unsigned long e) {
    Int s = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Int dp, qp;
        mpz_ui_pow_ui(dp.get_mpz_t(), d, e);
        s += dp;
        unsigned long q = n / d;
        if (q != d) {
            mpz_ui_pow_ui(qp.get_mpz_t(), q, e);
            s += qp;
        }
    }
    return s;
}

ModularForm eisenstein(long two_k, std::size_t prec) {
    if (two_k < 2 || two_k % 2 != 0)
        throw Error("eisenstein weight must be even and >= 2");
    BernoulliTable B = bernoulli(static_cast<std::size_t>(two_k));
    QSeries s = QSeries::zero(prec);
    if (prec > 0)
        s[0] = -B[static_cast<std::size_t>(two_k)] / Rat(2 * two_k);
    for (std::size_t n = 1; n < prec; ++n)
        s[n] = Rat(sigma_divisor(n, static_cast<unsigned long>(two_k - 1)));
    return {two_k, std::move(s)};
}

Generator parse_generator(const std::string& name) {
    if (name == "c4") return Generator::c4;
    if (name == "c6") return Generator::c6;
    if (name == "delta") return Generator::delta;
    throw ParseError("unknown generator: " + name);
}

QSeries euler_product(std::size_t prec) {
    // pentagonal number theorem: sum_k (-1)^k q^{k(3k-1)/2}, k in Z
    QSeries f = QSeries::zero(prec);
    if (prec > 0) f[0] = 1;
    for (long k = 1;; ++k) {
        unsigned long g1 = static_cast<unsigned long>(k * (3 * k - 1) / 2);
        unsigned long g2 = static_cast<unsigned long>(k * (3 * k + 1) / 2);
        if (g1 >= prec && g2 >= prec) break;
        Rat sign = (k % 2 == 0) ? 1 : -1;
        if (g1 < prec) f[g1] += sign;
        if (g2 < prec) f[g2] += sign;
    }
    return f;
}

ModularForm generator_q(Generator which, std::size_t prec) {
    if (prec < 1) throw Error("generator_q requires prec >= 1");
    switch (which) {
        case Generator::c4: {
            QSeries s = QSeries::one(prec);
            for (std::size_t n = 1; n < prec; ++n)
                s[n] = Rat(240) * Rat(sigma_divisor(n, 3));
            return {4, std::move(s)};
        }
        case Generator::c6: {
            QSeries s = QSeries::one(prec);
            for (std::size_t n = 1; n < prec; ++n)
                s[n] = Rat(-504) * Rat(sigma_divisor(n, 5));
            return {6, std::move(s)};
        }
        case Generator::delta: {
            // (prod (1-q^n))^24 via three squarings and one multiply,
            // then a shift by q
            QSeries f = euler_product(prec);
            QSeries f2 = f * f;
            QSeries f4 = f2 * f2;
            QSeries f8 = f4 * f4;
            QSeries f16 = f8 * f8;
            QSeries f24 = f16 * f8;
            return {12, f24.shift_up(1).truncated(prec)};
        }
    }
    throw Error("unreachable");
}

std::vector<Int> tau_values(std::size_t nmax) {
    ModularForm delta = generator_q(Generator::delta, nmax + 1);
    std::vector<Int> tau(nmax + 1);
    for (std::size_t n = 1; n <= nmax; ++n) tau[n] = delta.series[n].get_num();
    return tau;
}

std::vector<std::tuple<int, int, int>> weight_basis(long weight) {
    std::vector<std::tuple<int, int, int>> basis;
    if (weight < 0 || weight % 2 != 0) return basis;
    for (int k = 0; 12 * k <= weight; ++k) {
        long rem = weight - 12 * k;
        if (rem % 4 == 0) {
            basis.emplace_back(static_cast<int>(rem / 4), 0, k);
        } else if (rem >= 6 && (rem - 6) % 4 == 0) {
            basis.emplace_back(static_cast<int>((rem - 6) / 4), 1, k);
        }
    }
    return basis;
}

QSeries basis_monomial_q(int i, int j, int k, std::size_t prec) {
    QSeries r = QSeries::one(prec);
    if (i > 0)
        r *= pow(generator_q(Generator::c4, prec).series,
                 static_cast<unsigned long>(i));
    if (j > 0)
        r *= pow(generator_q(Generator::c6, prec).series,
                 static_cast<unsigned long>(j));
    if (k > 0)
        r *= pow(generator_q(Generator::delta, prec).series,
                 static_cast<unsigned long>(k));
    return r;
}

ModularFormDecomposition decompose(const ModularForm& f) {
    auto basis = weight_basis(f.weight);
    if (f.weight % 2 != 0 || f.weight < 0)
        throw NotInRing("no modular forms of weight " +
                        std::to_string(f.weight));
    std::size_t prec = f.series.prec();
    int kmax = basis.empty() ? -1 : std::get<2>(basis.back());
    if (prec < static_cast<std::size_t>(kmax + 1))
        throw InsufficientPrecision(
            "need at least " + std::to_string(kmax + 1) +
            " coefficients for weight " + std::to_string(f.weight));

    // triangular read-off: the Delta^k monomial has q-order exactly k
    ModularFormDecomposition d;
    d.weight = f.weight;
    QSeries remainder = f.series;
    for (const auto& [i, j, k] : basis) {
        Rat coord = remainder[static_cast<std::size_t>(k)];
        d.coords[{i, j, k}] = coord;
        if (coord != 0)
            remainder -= coord * basis_monomial_q(i, j, k, prec);
    }
    if (!remainder.is_zero()) {
        std::size_t bad = 0;
        while (remainder[bad] == 0) ++bad;
        throw NotInRing("not a modular form of weight " +
                        std::to_string(f.weight) +
                        ": first mismatch at q^" + std::to_string(bad));
    }
    return d;
}

QSeries reconstruct(const ModularFormDecomposition& d, std::size_t prec) {
    QSeries r = QSeries::zero(prec);
    for (const auto& [ijk, coord] : d.coords) {
        if (coord == 0) continue;
        auto [i, j, k] = ijk;
        r += coord * basis_monomial_q(i, j, k, prec);
    }
    return r;
}

Rat residue_delta(const ModularForm& f, long k) {
    if (k < 0) throw Error("residue_delta requires k >= 0");
    std::size_t prec = f.series.prec();
    if (prec < static_cast<std::size_t>(k + 1))
        throw InsufficientPrecision("residue_delta needs prec >= k+1");
    if (k == 0) return f.series[0];
    // q^0 coefficient of f * Delta^{-k} = q^k coefficient of f * (Delta/q)^{-k}
    QSeries delta_over_q =
        generator_q(Generator::delta, prec + 1).series.shift_down(1);
    QSeries inv = invert_unit(delta_over_q.truncated(prec));
    QSeries g = f.series * pow(inv, static_cast<unsigned long>(k));
    return g[static_cast<std::size_t>(k)];
}

ResidueCongruenceReport residue_congruence_equiv(const ModularForm& f,
                                                long k) {
    if (f.weight != 12 * k)
        throw Error("residue_congruence_equiv requires weight 12k");
    ResidueCongruenceReport rep;
    ModularFormDecomposition d = decompose(f);
    auto basis = weight_basis(f.weight);
    rep.x_k = 0;
    auto it = d.coords.find({0, 0, static_cast<int>(k)});
    if (it != d.coords.end()) rep.x_k = it->second;
    rep.residue = residue_delta(f, k);
    auto divisible24 = [](const Rat& x) {
        return is_integer(x) &&
               mpz_divisible_ui_p(x.get_num().get_mpz_t(), 24) != 0;
    };
    rep.x_k_divisible = divisible24(rep.x_k);
    rep.residue_divisible = divisible24(rep.residue);
    rep.equivalent = divisible24(rep.x_k - rep.residue);
    return rep;
}

}  // namespace tmf
