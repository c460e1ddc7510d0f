#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tmf/biseries.hpp"
#include "tmf/polynomial.hpp"
#include "tmf/rational.hpp"

namespace tmf {

// Coefficient-ring helpers.  The Weierstrass algebra is written once over a
// generic commutative ring T and instantiated at T = Rat (numeric mode) and
// T = Poly (symbolic mode, coefficients polynomials in a1..a6, r, s, t).
inline Rat ring_inverse(const Rat& x) {
    if (x == 0) throw Error("division by zero");
    return 1 / x;
}
inline Poly ring_inverse(const Poly& p) {
    if (!p.is_constant() || p.constant_value() == 0)
        throw Error("Poly inverse only defined for nonzero constants");
    return Poly(1 / p.constant_value());
}
inline bool ring_is_zero(const Rat& x) { return x == 0; }
inline bool ring_is_zero(const Poly& p) { return p.is_zero(); }

template <typename T>
struct WeierstrassCurve {
    T a1{}, a2{}, a3{}, a4{}, a6{};
};

using Curve = WeierstrassCurve<Rat>;
using SymbolicCurve = WeierstrassCurve<Poly>;

// The universal curve with indeterminate coefficients.
inline SymbolicCurve universal_curve() {
    return {Poly::a1(), Poly::a2(), Poly::a3(), Poly::a4(), Poly::a6()};
}

template <typename T>
struct CurveTransformation {
    T lambda{};  // must be invertible in T
    T r{}, s{}, t{};
};

using Transformation = CurveTransformation<Rat>;

template <typename T>
struct CurveInvariants {
    T b2, b4, b6, b8;
    T c4, c6, delta;
    std::optional<T> j;  // present iff delta is invertible (numeric, != 0)
};

// b- and c-invariants per the standard formulaire; j = c4^3/delta when the
// discriminant is nonzero.
template <typename T>
CurveInvariants<T> invariants(const WeierstrassCurve<T>& c) {
    CurveInvariants<T> inv;
    inv.b2 = c.a1 * c.a1 + T(4) * c.a2;
    inv.b4 = T(2) * c.a4 + c.a1 * c.a3;
    inv.b6 = c.a3 * c.a3 + T(4) * c.a6;
    inv.b8 = c.a1 * c.a1 * c.a6 + T(4) * c.a2 * c.a6 - c.a1 * c.a3 * c.a4 +
             c.a2 * c.a3 * c.a3 - c.a4 * c.a4;
    inv.c4 = inv.b2 * inv.b2 - T(24) * inv.b4;
    inv.c6 = T(-1) * inv.b2 * inv.b2 * inv.b2 + T(36) * inv.b2 * inv.b4 -
             T(216) * inv.b6;
    inv.delta = T(-1) * inv.b2 * inv.b2 * inv.b8 -
                T(8) * inv.b4 * inv.b4 * inv.b4 -
                T(27) * inv.b6 * inv.b6 + T(9) * inv.b2 * inv.b4 * inv.b6;
    if constexpr (std::is_same_v<T, Rat>) {
        if (inv.delta != 0)
            inv.j = inv.c4 * inv.c4 * inv.c4 * ring_inverse(inv.delta);
    }
    return inv;
}

// Coordinate change x = lambda^2 x' + r, y = lambda^3 y' + s x' + t
// substituted into the curve equation and renormalized by lambda^6.
// This direction is frozen; the composition law below matches it.
template <typename T>
WeierstrassCurve<T> transform(const WeierstrassCurve<T>& c,
                              const CurveTransformation<T>& g);

// g1 then g2 as substitutions: transform(transform(c,g1),g2) ==
// transform(c, compose(g1,g2)).
template <typename T>
CurveTransformation<T> compose(const CurveTransformation<T>& g1,
                               const CurveTransformation<T>& g2) {
    CurveTransformation<T> g;
    g.lambda = g1.lambda * g2.lambda;
    g.r = g1.lambda * g1.lambda * g2.r + g1.r;
    g.s = g1.lambda * g1.lambda * g1.lambda * g2.s +
          g2.lambda * g2.lambda * g1.s;
    g.t = g1.lambda * g1.lambda * g1.lambda * g2.t + g1.s * g2.r + g1.t;
    return g;
}

// Group law of the curve expanded at the origin in the local coordinate
// t = -x/y, as a truncated symmetric bivariate series.
template <typename T>
struct FormalGroupLaw {
    int degree;  // coefficients known for total degree <= degree
    // coeffs[i][j] for i + j <= degree
    std::vector<std::vector<T>> coeffs;

    const T& at(int i, int j) const { return coeffs[i][j]; }
};

template <typename T>
FormalGroupLaw<T> formal_group_law(const WeierstrassCurve<T>& c, int degree);

// F(F(s,t),u) == F(s,F(t,u)) through the truncation degree.
template <typename T>
bool fgl_associative(const FormalGroupLaw<T>& F);

// Fourier expansion of the Weierstrass P-function quadratic differential
// with u = e^x, the double summation over q^{nk} u^{+-k} with n >= 1
// (the q^0 u-pole term is omitted; its trace is the constant 1/12).
// Even in x.  terms()[j] is the q-series coefficient of x^j.
BiSeries p_expansion(std::size_t qprec, std::size_t zorder);

// sigma(q, e^x) = 2 sinh(x/2) prod (1-q^n e^x)(1-q^n e^-x)/(1-q^n)^2,
// odd in x with leading term x.
BiSeries sigma_expansion(std::size_t qprec, std::size_t zorder);

extern template CurveInvariants<Rat> invariants(const WeierstrassCurve<Rat>&);
extern template CurveInvariants<Poly> invariants(
    const WeierstrassCurve<Poly>&);
extern template WeierstrassCurve<Rat> transform(
    const WeierstrassCurve<Rat>&, const CurveTransformation<Rat>&);
extern template WeierstrassCurve<Poly> transform(
    const WeierstrassCurve<Poly>&, const CurveTransformation<Poly>&);
extern template FormalGroupLaw<Rat> formal_group_law(
    const WeierstrassCurve<Rat>&, int);
extern template FormalGroupLaw<Poly> formal_group_law(
    const WeierstrassCurve<Poly>&, int);
extern template bool fgl_associative(const FormalGroupLaw<Rat>&);
extern template bool fgl_associative(const FormalGroupLaw<Poly>&);

}  // namespace tmf
