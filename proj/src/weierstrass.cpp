#include "tmf/weierstrass.hpp"

#include <algorithm>

namespace tmf {

namespace {

// ---- small polynomial in the affine coordinates X, Y --------------------

template <typename T>
using XYPoly = std::map<std::pair<int, int>, T>;

template <typename T>
void xy_add(XYPoly<T>& a, const std::pair<int, int>& k,
            const std::type_identity_t<T>& v) {
    auto it = a.find(k);
    if (it == a.end()) {
        if (!ring_is_zero(v)) a[k] = v;
    } else {
        it->second += v;
        if (ring_is_zero(it->second)) a.erase(it);
    }
}

template <typename T>
XYPoly<T> xy_mul(const XYPoly<T>& a, const XYPoly<T>& b) {
    XYPoly<T> r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b)
            xy_add(r, {ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
}

template <typename T>
XYPoly<T> xy_pow(const XYPoly<T>& a, int n) {
    XYPoly<T> r{{{0, 0}, T(1)}};
    for (int i = 0; i < n; ++i) r = xy_mul(r, a);
    return r;
}

// ---- truncated bivariate series over T, total degree <= deg --------------

template <typename T>
struct TruncBi {
    int deg;
    std::vector<std::vector<T>> c;  // c[i][j], i + j <= deg

    explicit TruncBi(int d) : deg(d), c(d + 1) {
        for (int i = 0; i <= d; ++i) c[i].assign(d + 1 - i, T(0));
    }
    static TruncBi constant(int d, const T& v) {
        TruncBi r(d);
        r.c[0][0] = v;
        return r;
    }
    static TruncBi var1(int d) {
        TruncBi r(d);
        if (d >= 1) r.c[1][0] = T(1);
        return r;
    }
    static TruncBi var2(int d) {
        TruncBi r(d);
        if (d >= 1) r.c[0][1] = T(1);
        return r;
    }

    TruncBi operator+(const TruncBi& b) const {
        TruncBi r(deg);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j)
                r.c[i][j] = c[i][j] + b.c[i][j];
        return r;
    }
    TruncBi operator-(const TruncBi& b) const {
        TruncBi r(deg);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j)
                r.c[i][j] = c[i][j] - b.c[i][j];
        return r;
    }
    TruncBi operator*(const TruncBi& b) const {
        TruncBi r(deg);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j) {
                if (ring_is_zero(c[i][j])) continue;
                for (int k = 0; i + j + k <= deg; ++k)
                    for (int l = 0; i + j + k + l <= deg; ++l) {
                        if (ring_is_zero(b.c[k][l])) continue;
                        r.c[i + k][j + l] += c[i][j] * b.c[k][l];
                    }
            }
        return r;
    }
    TruncBi scaled(const T& s) const {
        TruncBi r(deg);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j) r.c[i][j] = s * c[i][j];
        return r;
    }
    // multiplicative inverse; constant term must be invertible in T
    TruncBi inverse() const {
        TruncBi r(deg);
        T inv0 = ring_inverse(c[0][0]);
        // iterate over total degree; solve (this * r)[d] = [d == 0]
        for (int d = 0; d <= deg; ++d)
            for (int i = 0; i <= d; ++i) {
                int j = d - i;
                T s = (d == 0) ? T(1) : T(0);
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        if (k == 0 && l == 0) continue;
                        if (ring_is_zero(c[k][l])) continue;
                        s -= c[k][l] * r.c[i - k][j - l];
                    }
                r.c[i][j] = inv0 * s;
            }
        return r;
    }
    bool operator==(const TruncBi& b) const { return c == b.c; }
};

// ---- trivariate counterpart, used for the associativity check ------------

template <typename T>
struct TruncTri {
    int deg;
    std::vector<std::vector<std::vector<T>>> c;

    explicit TruncTri(int d) : deg(d), c(d + 1) {
        for (int i = 0; i <= d; ++i) {
            c[i].resize(d + 1 - i);
            for (int j = 0; i + j <= d; ++j)
                c[i][j].assign(d + 1 - i - j, T(0));
        }
    }
    static TruncTri variable(int d, int which) {
        TruncTri r(d);
        if (d >= 1) {
            if (which == 0) r.c[1][0][0] = T(1);
            if (which == 1) r.c[0][1][0] = T(1);
            if (which == 2) r.c[0][0][1] = T(1);
        }
        return r;
    }
    TruncTri operator+(const TruncTri& b) const {
        TruncTri r(deg);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j)
                for (int k = 0; i + j + k <= deg; ++k)
                    r.c[i][j][k] = c[i][j][k] + b.c[i][j][k];
        return r;
    }
    TruncTri operator*(const TruncTri& b) const {
        TruncTri r(deg);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j)
                for (int k = 0; i + j + k <= deg; ++k) {
                    if (ring_is_zero(c[i][j][k])) continue;
                    int rem = deg - i - j - k;
                    for (int x = 0; x <= rem; ++x)
                        for (int y = 0; x + y <= rem; ++y)
                            for (int z = 0; x + y + z <= rem; ++z) {
                                if (ring_is_zero(b.c[x][y][z])) continue;
                                r.c[i + x][j + y][k + z] +=
                                    c[i][j][k] * b.c[x][y][z];
                            }
                }
        return r;
    }
    TruncTri scaled(const T& s) const {
        TruncTri r(deg);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j)
                for (int k = 0; i + j + k <= deg; ++k)
                    r.c[i][j][k] = s * c[i][j][k];
        return r;
    }
    bool operator==(const TruncTri& b) const { return c == b.c; }
};

// F evaluated at two trivariate arguments (both with zero constant term).
template <typename T>
TruncTri<T> fgl_eval(const FormalGroupLaw<T>& F, const TruncTri<T>& A,
                     const TruncTri<T>& B) {
    int d = A.deg;
    std::vector<TruncTri<T>> ap, bp;
    ap.push_back(TruncTri<T>(d));
    ap[0].c[0][0][0] = T(1);
    bp.push_back(ap[0]);
    for (int n = 1; n <= F.degree; ++n) {
        ap.push_back(ap[n - 1] * A);
        bp.push_back(bp[n - 1] * B);
    }
    TruncTri<T> r(d);
    for (int i = 0; i <= F.degree; ++i)
        for (int j = 0; i + j <= F.degree; ++j) {
            if (ring_is_zero(F.coeffs[i][j])) continue;
            r = r + (ap[i] * bp[j]).scaled(F.coeffs[i][j]);
        }
    return r;
}

}  // namespace

// ---- transform -----------------------------------------------------------

template <typename T>
WeierstrassCurve<T> transform(const WeierstrassCurve<T>& c,
                              const CurveTransformation<T>& g) {
    T l2 = g.lambda * g.lambda;
    T l3 = l2 * g.lambda;
    T l6inv = ring_inverse(l3 * l3);

    // curve polynomial E(x,y) = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
    XYPoly<T> E;
    xy_add(E, {0, 2}, T(1));
    xy_add(E, {1, 1}, c.a1);
    xy_add(E, {0, 1}, c.a3);
    xy_add(E, {3, 0}, T(-1));
    xy_add(E, {2, 0}, T(-1) * c.a2);
    xy_add(E, {1, 0}, T(-1) * c.a4);
    xy_add(E, {0, 0}, T(-1) * c.a6);

    XYPoly<T> xs, ys;
    xy_add(xs, {1, 0}, l2);
    xy_add(xs, {0, 0}, g.r);
    xy_add(ys, {0, 1}, l3);
    xy_add(ys, {1, 0}, g.s);
    xy_add(ys, {0, 0}, g.t);

    XYPoly<T> out;
    for (const auto& [k, v] : E) {
        XYPoly<T> term = xy_pow(xs, k.first);
        term = xy_mul(term, xy_pow(ys, k.second));
        for (auto& [kk, vv] : term) xy_add(out, kk, v * vv);
    }
    for (auto& [k, v] : out) v = l6inv * v;

    auto coeff = [&](int i, int j) -> T {
        auto it = out.find({i, j});
        return it == out.end() ? T(0) : it->second;
    };
    // sanity: the substitution must return a Weierstrass equation
    if (!(coeff(0, 2) == T(1)) || !(coeff(3, 0) == T(-1)))
        throw Error("transform: substitution lost the Weierstrass shape");

    WeierstrassCurve<T> out_curve;
    out_curve.a1 = coeff(1, 1);
    out_curve.a3 = coeff(0, 1);
    out_curve.a2 = T(-1) * coeff(2, 0);
    out_curve.a4 = T(-1) * coeff(1, 0);
    out_curve.a6 = T(-1) * coeff(0, 0);
    return out_curve;
}

// ---- formal group law ----------------------------------------------------

template <typename T>
FormalGroupLaw<T> formal_group_law(const WeierstrassCurve<T>& c, int degree) {
    if (degree < 2) throw Error("formal_group_law requires degree >= 2");
    const int wdeg = degree + 1;  // w coefficients A_3..A_{degree+1} enter

    // Solve w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
    // in the chart z = -x/y, w = -1/y, by fixed-point iteration.
    std::vector<T> w(wdeg + 1, T(0));
    if (wdeg >= 3) w[3] = T(1);
    auto step = [&](const std::vector<T>& u) {
        auto mul = [&](const std::vector<T>& a, const std::vector<T>& b) {
            std::vector<T> r(wdeg + 1, T(0));
            for (int i = 0; i <= wdeg; ++i) {
                if (ring_is_zero(a[i])) continue;
                for (int j = 0; i + j <= wdeg; ++j) {
                    if (ring_is_zero(b[j])) continue;
                    r[i + j] += a[i] * b[j];
                }
            }
            return r;
        };
        std::vector<T> z(wdeg + 1, T(0));
        if (wdeg >= 1) z[1] = T(1);
        std::vector<T> u2 = mul(u, u);
        std::vector<T> u3 = mul(u2, u);
        std::vector<T> zu = mul(z, u);
        std::vector<T> zzu = mul(z, zu);
        std::vector<T> zu2 = mul(z, u2);
        std::vector<T> r(wdeg + 1, T(0));
        if (wdeg >= 3) r[3] = T(1);
        for (int i = 0; i <= wdeg; ++i)
            r[i] += c.a1 * zu[i] + c.a2 * zzu[i] + c.a3 * u2[i] +
                    c.a4 * zu2[i] + c.a6 * u3[i];
        return r;
    };
    bool stable = false;
    for (int it = 0; it <= wdeg + 2; ++it) {
        std::vector<T> next = step(w);
        if (next == w) {
            stable = true;
            break;
        }
        w = std::move(next);
    }
    if (!stable) throw NonConvergence("w(z) expansion did not stabilize");

    using Bi = TruncBi<T>;
    const int D = degree;
    Bi z1 = Bi::var1(D), z2 = Bi::var2(D);

    // chord slope lambda = (w(z2)-w(z1))/(z2-z1)
    //  = sum_n A_n * (z1^{n-1} + z1^{n-2} z2 + ... + z2^{n-1})
    Bi lam(D);
    for (int n = 3; n <= wdeg; ++n) {
        if (ring_is_zero(w[n])) continue;
        for (int i = 0; i <= n - 1; ++i) {
            int j = n - 1 - i;
            if (i + j <= D) lam.c[i][j] += w[n];
        }
    }
    // w(z1) embedded as a bivariate series
    Bi w1(D);
    for (int n = 0; n <= std::min(wdeg, D); ++n) w1.c[n][0] = w[n];
    Bi nu = w1 - lam * z1;

    // substitute the chord line w = lam z + nu into the cubic; the three
    // roots z1, z2, z3 satisfy
    //   z3 = -z1 - z2 - s2/s3,
    //   s3 = 1 + a2 lam + a4 lam^2 + a6 lam^3,
    //   s2 = a1 lam + a2 nu + a3 lam^2 + 2 a4 lam nu + 3 a6 lam^2 nu.
    Bi lam2 = lam * lam;
    Bi s3 = Bi::constant(D, T(1)) + lam.scaled(c.a2) + lam2.scaled(c.a4) +
            (lam2 * lam).scaled(c.a6);
    Bi s2 = lam.scaled(c.a1) + nu.scaled(c.a2) + lam2.scaled(c.a3) +
            (lam * nu).scaled(T(2) * c.a4) + (lam2 * nu).scaled(T(3) * c.a6);
    Bi z3 = (Bi(D) - z1 - z2) - s2 * s3.inverse();
    Bi w3 = lam * z3 + nu;

    // group law: invert the third intersection point,
    //   F = -z3 / (1 - a1 z3 - a3 w3)
    Bi denom = Bi::constant(D, T(1)) - z3.scaled(c.a1) - w3.scaled(c.a3);
    Bi F = (Bi(D) - z3) * denom.inverse();

    FormalGroupLaw<T> law;
    law.degree = degree;
    law.coeffs.resize(degree + 1);
    for (int i = 0; i <= degree; ++i) {
        law.coeffs[i].resize(degree + 1 - i);
        for (int j = 0; i + j <= degree; ++j) law.coeffs[i][j] = F.c[i][j];
    }
    return law;
}

template <typename T>
bool fgl_associative(const FormalGroupLaw<T>& F) {
    int d = F.degree;
    using Tri = TruncTri<T>;
    Tri s = Tri::variable(d, 0), t = Tri::variable(d, 1),
        u = Tri::variable(d, 2);
    Tri Fst = fgl_eval(F, s, t);
    Tri Ftu = fgl_eval(F, t, u);
    return fgl_eval(F, Fst, u) == fgl_eval(F, s, Ftu);
}

// ---- two-variable expansions --------------------------------------------

BiSeries p_expansion(std::size_t qprec, std::size_t zorder) {
    if (qprec < 1) throw Error("p_expansion requires qprec >= 1");
    BiSeries P = BiSeries::zero(zorder, qprec);
    if (zorder > 0) P[0][0] = make_rat(1, 12);
    // sum_{n,k>=1} k q^{nk} (e^{kx} + e^{-kx} - 2)
    for (std::size_t k = 1; k < qprec; ++k) {
        QSeries sk = QSeries::zero(qprec);  // sum_n q^{nk}
        for (std::size_t m = k; m < qprec; m += k) sk[m] = 1;
        Rat kr(static_cast<long>(k));
        Rat factorial = 1;
        Rat kpow = 1;  // k^j
        for (std::size_t j = 1; j < zorder; ++j) {
            factorial *= Rat(static_cast<long>(j));
            kpow *= kr;
            if (j % 2 != 0) continue;
            Rat profile = kr * 2 * kpow / factorial;  // k * 2 k^j / j!
            P[j] += profile * sk;
        }
    }
    return P;
}

BiSeries sigma_expansion(std::size_t qprec, std::size_t zorder) {
    if (zorder < 1) throw Error("sigma_expansion requires zorder >= 1");
    if (qprec < 1) throw Error("sigma_expansion requires qprec >= 1");
    // 2 sinh(x/2) = sum_{j odd} x^j / (2^{j-1} j!)
    BiSeries S = BiSeries::zero(zorder, qprec);
    Rat factorial = 1;
    Rat half_pow = 2;  // 2 * (1/2)^j
    for (std::size_t j = 1; j < zorder; ++j) {
        factorial *= Rat(static_cast<long>(j));
        half_pow /= 2;
        if (j % 2 == 1) S[j] = QSeries(half_pow / factorial, qprec);
    }
    for (std::size_t n = 1; n < qprec; ++n) {
        // (1 - q^n e^x)(1 - q^n e^-x) = 1 - q^n(e^x + e^-x) + q^{2n}
        BiSeries f = BiSeries::zero(zorder, qprec);
        f[0] = QSeries::one(qprec);
        if (2 * n < qprec) f[0][2 * n] = 1;
        Rat fact = 1;
        for (std::size_t j = 0; j < zorder; ++j) {
            if (j > 0) fact *= Rat(static_cast<long>(j));
            if (j % 2 != 0) continue;
            Rat coeff = (j == 0) ? Rat(2) : Rat(2) / fact;
            f[j][n] -= coeff;  // -q^n * 2 x^j / j!
        }
        QSeries base = QSeries::one(qprec);
        base[n] = -1;  // 1 - q^n
        S = (invert_unit(base * base)) * (S * f);
    }
    return S;
}

template CurveInvariants<Rat> invariants(const WeierstrassCurve<Rat>&);
template CurveInvariants<Poly> invariants(const WeierstrassCurve<Poly>&);
template WeierstrassCurve<Rat> transform(const WeierstrassCurve<Rat>&,
                                         const CurveTransformation<Rat>&);
template WeierstrassCurve<Poly> transform(const WeierstrassCurve<Poly>&,
                                          const CurveTransformation<Poly>&);
template FormalGroupLaw<Rat> formal_group_law(const WeierstrassCurve<Rat>&,
                                              int);
template FormalGroupLaw<Poly> formal_group_law(const WeierstrassCurve<Poly>&,
                                               int);
template bool fgl_associative(const FormalGroupLaw<Rat>&);
template bool fgl_associative(const FormalGroupLaw<Poly>&);

}  // namespace tmf
