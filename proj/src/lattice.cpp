#include "tmf/lattice.hpp"

#include <algorithm>

#include "tmf/weierstrass.hpp"

namespace tmf {

namespace {

// Unit lower-triangular LDL factorization over the rationals; pivots d[i]
// are the successive ratios of leading principal minors, so positivity of
// every pivot is exactly positive definiteness and their product is the
// determinant.
struct LdlDecomposition {
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> l;  // l[i][j] for j > i
};

LdlDecomposition ldl(const GramLattice& g) {
    int n = g.dim;
    std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = Rat(g.gram[i][j]);

    LdlDecomposition out;
    out.d.resize(n);
    out.l.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        out.d[i] = q[i][i];
        if (out.d[i] <= 0)
            throw NotPositiveDefinite(
                "leading principal minor " + std::to_string(i + 1) +
                " is not positive");
        for (int j = i + 1; j < n; ++j) out.l[i][j] = q[i][j] / out.d[i];
        for (int j = i + 1; j < n; ++j)
            for (int m = j; m < n; ++m) {
                q[j][m] -= out.d[i] * out.l[i][j] * out.l[i][m];
                q[m][j] = q[j][m];
            }
    }
    return out;
}

// Largest integer whose square is <= a (a >= 0).
Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

struct Enumerator {
    const LdlDecomposition& dec;
    int n;
    Rat bound;  // max_norm
    unsigned long budget;
    unsigned long emitted = 0;
    std::vector<long> x;
    ShellTable* out;

    // Level i with remaining quadratic budget rem; tail_zero means every
    // coordinate above i is zero, which pins the +- fold: the highest
    // nonzero coordinate of each emitted representative is positive.
    void descend(int i, const Rat& rem, bool tail_zero) {
        if (i < 0) {
            emit(bound - rem);
            return;
        }
        Rat u(0);
        for (int j = i + 1; j < n; ++j)
            if (x[j] != 0) u += dec.l[i][j] * Rat(x[j]);
        // d_i (x + u)^2 <= rem, i.e. |x + u| <= sqrt(rem / d_i).
        Rat radius2 = rem / dec.d[i];
        // Overestimate sqrt(a/b) by (isqrt(ab) + 1)/b, then correct the
        // integer endpoints with the exact quadratic predicate.
        Int ab = radius2.get_num() * radius2.get_den();
        Rat overshoot =
            Rat(isqrt(ab) + 1) / Rat(radius2.get_den());
        auto fits = [&](const Int& v) {
            Rat s = Rat(v) + u;
            return s * s <= radius2;
        };
        Int hi = rat_floor(overshoot - u);
        Int lo = rat_ceil(-overshoot - u);
        while (hi >= lo && !fits(hi)) --hi;
        while (lo <= hi && !fits(lo)) ++lo;
        if (tail_zero && lo < 0) lo = 0;
        for (Int v = lo; v <= hi; ++v) {
            x[i] = v.get_si();
            Rat s = Rat(x[i]) + u;
            descend(i - 1, rem - dec.d[i] * s * s,
                    tail_zero && x[i] == 0);
        }
        x[i] = 0;
    }

    void emit(const Rat& norm) {
        if (!is_integer(norm))
            throw LatticeError("internal: non-integral vector norm");
        long nm = norm.get_num().get_si();
        if (++emitted > budget)
            throw BudgetExceeded(
                "enumeration exceeded " + std::to_string(budget) +
                " representatives");
        out->shells[nm].push_back(x);
    }
};

}  // namespace

void validate(const GramLattice& g) {
    int n = g.dim;
    if (n <= 0 || g.gram.size() != static_cast<std::size_t>(n))
        throw LatticeError("gram matrix shape does not match dim");
    for (const auto& row : g.gram)
        if (row.size() != static_cast<std::size_t>(n))
            throw LatticeError("gram matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.gram[i][j] != g.gram[j][i])
                throw NotSymmetric("entries (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") and transpose differ");
    for (int i = 0; i < n; ++i)
        if (g.gram[i][i] % 2 != 0)
            throw NotEven("odd diagonal entry at index " + std::to_string(i));
    LdlDecomposition dec = ldl(g);  // throws NotPositiveDefinite
    Rat det(1);
    for (const Rat& d : dec.d) det *= d;
    if (det != 1)
        throw NotUnimodular("determinant is " + format_rat(det));
}

long inner(const GramLattice& g, const std::vector<long>& a,
           const std::vector<long>& b) {
    if (a.size() != static_cast<std::size_t>(g.dim) ||
        b.size() != static_cast<std::size_t>(g.dim))
        throw LatticeError("vector length does not match lattice dim");
    long s = 0;
    for (int i = 0; i < g.dim; ++i) {
        if (a[i] == 0) continue;
        long row = 0;
        for (int j = 0; j < g.dim; ++j) row += g.gram[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

ShellTable enumerate(const GramLattice& g, long max_norm,
                     unsigned long budget) {
    validate(g);
    if (max_norm < 0) throw LatticeError("max_norm must be >= 0");
    ShellTable t;
    t.max_norm = max_norm;
    LdlDecomposition dec = ldl(g);
    Enumerator e{dec, g.dim, Rat(max_norm), budget, 0,
                 std::vector<long>(g.dim, 0), &t};
    e.descend(g.dim - 1, Rat(max_norm), true);
    for (auto& [nm, reps] : t.shells) {
        std::sort(reps.begin(), reps.end());
        t.counts[nm] = (nm == 0) ? Int(1) : Int(2 * reps.size());
    }
    // Every even norm through the bound appears, empty shells included.
    for (long nm = 0; nm <= max_norm; nm += 2)
        if (!t.counts.count(nm)) t.counts[nm] = 0;
    return t;
}

ModularForm theta_from_table(const GramLattice& g, const ShellTable& t,
                             std::size_t prec) {
    if (g.dim % 2 != 0) throw LatticeError("theta requires even dim");
    if (prec > 0 && t.max_norm < 2 * (static_cast<long>(prec) - 1))
        throw InsufficientPrecision("shell table too shallow for prec");
    QSeries s = QSeries::zero(prec);
    for (std::size_t m = 0; m < prec; ++m) {
        auto it = t.counts.find(2 * static_cast<long>(m));
        if (it != t.counts.end()) s[m] = Rat(it->second);
    }
    return {g.dim / 2, std::move(s)};
}

ModularForm theta(const GramLattice& g, std::size_t prec,
                  unsigned long budget) {
    long max_norm = prec > 0 ? 2 * (static_cast<long>(prec) - 1) : 0;
    return theta_from_table(g, enumerate(g, max_norm, budget), prec);
}

ModularForm theta_mu_from_table(const GramLattice& g, const ShellTable& t,
                                const LatticeVector& mu, std::size_t prec) {
    if (g.dim % 2 != 0) throw LatticeError("theta_mu requires even dim");
    if (prec > 0 && t.max_norm < 2 * (static_cast<long>(prec) - 1))
        throw InsufficientPrecision("shell table too shallow for prec");
    long norm_mu = inner(g, mu.coords, mu.coords);
    QSeries s = QSeries::zero(prec);
    // First sum: the +- fold turns 2 * <l,mu>^2/2 into <l,mu>^2 per
    // representative; the zero vector contributes nothing.
    for (const auto& [nm, reps] : t.shells) {
        if (nm == 0 || nm / 2 >= static_cast<long>(prec)) continue;
        Int acc = 0;
        for (const auto& l : reps) {
            long c = inner(g, mu.coords, l);
            acc += Int(c) * Int(c);
        }
        s[static_cast<std::size_t>(nm / 2)] += Rat(acc);
    }
    // Correction term <mu,mu> theta_L sum_m sigma_1(m) q^m: the theta_L
    // factor is what makes phi^(2) = theta_mu - (<mu,mu>/24) theta_L an
    // exact identity (expand (sigma/x)^{-<mu,mu>} to x^2 and collect).
    QSeries weighted = QSeries::zero(prec);
    for (std::size_t m = 1; m < prec; ++m)
        weighted[m] = Rat(norm_mu) * Rat(sigma_divisor(m, 1));
    s += weighted * theta_from_table(g, t, prec).series;
    return {g.dim / 2 + 2, std::move(s)};
}

ModularForm theta_mu(const GramLattice& g, const LatticeVector& mu,
                     std::size_t prec, unsigned long budget) {
    long max_norm = prec > 0 ? 2 * (static_cast<long>(prec) - 1) : 0;
    return theta_mu_from_table(g, enumerate(g, max_norm, budget), mu, prec);
}

std::vector<QSeries> phi_mu_from_table(const GramLattice& g,
                                       const ShellTable& t,
                                       const LatticeVector& mu,
                                       std::size_t qprec,
                                       std::size_t xorder) {
    if (qprec < 1) throw Error("phi_mu requires qprec >= 1");
    long norm_mu = inner(g, mu.coords, mu.coords);
    std::size_t m = static_cast<std::size_t>(norm_mu);
    std::size_t zorder = m + xorder + 1;

    // Theta kernel sum_l q^{<l,l>/2} e^{<mu,l>x}; each +- pair folds to
    // 2 cosh(<mu,l>x), killing the odd x-powers.
    BiSeries num = BiSeries::zero(zorder, qprec);
    num[0][0] += 1;  // zero vector
    for (const auto& [nm, reps] : t.shells) {
        if (nm == 0 || nm / 2 >= static_cast<long>(qprec)) continue;
        std::size_t qidx = static_cast<std::size_t>(nm / 2);
        for (const auto& l : reps) {
            Int c(inner(g, mu.coords, l));
            Int cpow = 1;
            Rat fact = 1;
            for (std::size_t j = 0; j < zorder; ++j) {
                if (j > 0) {
                    cpow *= c;
                    fact *= Rat(static_cast<long>(j));
                }
                if (j % 2 == 0) num[j][qidx] += Rat(2) * Rat(cpow) / fact;
            }
        }
    }

    BiSeries quotient = num;
    if (m > 0) {
        BiSeries sigma_over_x =
            sigma_expansion(qprec, zorder + 1).shift_down_z(1);
        quotient = num * invert_unit(pow(sigma_over_x, m));
    }
    for (std::size_t j = 1; j < quotient.zorder(); j += 2)
        if (!quotient[j].is_zero())
            throw OddTermResidual("odd x-power " + std::to_string(j) +
                                  " survived the +- fold");
    std::vector<QSeries> phi;
    for (std::size_t j = 0; j <= xorder && j < quotient.zorder(); j += 2)
        phi.push_back(quotient[j]);
    return phi;
}

std::vector<QSeries> phi_mu(const GramLattice& g, const LatticeVector& mu,
                            std::size_t qprec, std::size_t xorder,
                            unsigned long budget) {
    long max_norm = 2 * (static_cast<long>(qprec) - 1);
    return phi_mu_from_table(g, enumerate(g, max_norm, budget), mu, qprec,
                             xorder);
}

BorcherdsReport borcherds_check(const GramLattice& g, unsigned long budget) {
    if (g.dim % 24 != 0) throw DimensionNot24k(g.dim);
    long k = g.dim / 24;
    ModularForm th = theta(g, static_cast<std::size_t>(k) + 2, budget);
    ResidueCongruenceReport rc = residue_congruence_equiv(th, k);
    BorcherdsReport rep;
    rep.k = k;
    rep.x_k = rc.x_k;
    rep.residue = rc.residue;
    rep.x_k_divisible = rc.x_k_divisible;
    rep.residue_divisible = rc.residue_divisible;
    rep.paths_agree = rc.equivalent;
    rep.pass = rep.x_k_divisible && rep.residue_divisible && rep.paths_agree;
    return rep;
}

QuadRefinementReport quad_refinement_from_table(const GramLattice& g,
                                                const ShellTable& t,
                                                const LatticeVector& mu) {
    if (g.dim % 24 != 0) throw DimensionNot24k(g.dim);
    long k = g.dim / 24;
    std::size_t prec = static_cast<std::size_t>(k) + 1;
    QuadRefinementReport rep;
    rep.k = k;
    rep.norm_mu = inner(g, mu.coords, mu.coords);
    rep.residue_mu = residue_delta(theta_mu_from_table(g, t, mu, prec), k);
    rep.residue_L = residue_delta(theta_from_table(g, t, prec), k);
    rep.main_residue_holds =
        rep.residue_mu == Rat(rep.norm_mu) / Rat(24) * rep.residue_L;
    if (!is_integer(rep.residue_mu))
        throw NonIntegralResidue("res(theta_mu/Delta^k dq/q) = " +
                                 format_rat(rep.residue_mu));
    rep.p_mu = mpz_odd_p(rep.residue_mu.get_num().get_mpz_t()) ? 1 : 0;
    return rep;
}

QuadRefinementReport quad_refinement(const GramLattice& g,
                                     const LatticeVector& mu,
                                     unsigned long budget) {
    long k = g.dim / 24;
    if (g.dim % 24 != 0) throw DimensionNot24k(g.dim);
    long max_norm = 2 * k;
    return quad_refinement_from_table(g, enumerate(g, max_norm, budget), mu);
}

}  // namespace tmf
