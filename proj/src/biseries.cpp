#include "tmf/biseries.hpp"

#include <algorithm>

namespace tmf {

BiSeries::BiSeries(std::vector<QSeries> terms) : t_(std::move(terms)) {
    for (const auto& t : t_)
        if (t.prec() != t_[0].prec())
            throw Error("BiSeries terms must share one q-precision");
}

BiSeries BiSeries::zero(std::size_t zorder, std::size_t qprec) {
    return BiSeries(std::vector<QSeries>(zorder, QSeries::zero(qprec)));
}

BiSeries BiSeries::one(std::size_t zorder, std::size_t qprec) {
    BiSeries r = zero(zorder, qprec);
    if (zorder > 0) r.t_[0] = QSeries::one(qprec);
    return r;
}

BiSeries BiSeries::exponential(const Rat& c, std::size_t zorder,
                               std::size_t qprec) {
    BiSeries r = zero(zorder, qprec);
    Rat term = 1;  // c^j / j!
    for (std::size_t j = 0; j < zorder; ++j) {
        if (j > 0) term = term * c / Rat(static_cast<long>(j));
        r.t_[j] = QSeries(term, qprec);
    }
    return r;
}

BiSeries BiSeries::truncated_z(std::size_t zorder) const {
    if (zorder >= t_.size()) return *this;
    return BiSeries(std::vector<QSeries>(t_.begin(), t_.begin() + zorder));
}

BiSeries BiSeries::shift_down_z(std::size_t k) const {
    if (t_.size() < k)
        throw InsufficientPrecision("shift_down_z below z-order");
    for (std::size_t j = 0; j < k; ++j)
        if (!t_[j].is_zero())
            throw Error("shift_down_z: nonzero term below z^k");
    return BiSeries(std::vector<QSeries>(t_.begin() + k, t_.end()));
}

static std::size_t common_zorder(const BiSeries& a, const BiSeries& b) {
    return std::min(a.zorder(), b.zorder());
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    std::size_t n = common_zorder(a, b);
    std::vector<QSeries> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = a[j] + b[j];
    return BiSeries(std::move(r));
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    std::size_t n = common_zorder(a, b);
    std::vector<QSeries> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = a[j] - b[j];
    return BiSeries(std::move(r));
}

BiSeries operator-(const BiSeries& a) {
    std::vector<QSeries> r(a.zorder());
    for (std::size_t j = 0; j < a.zorder(); ++j) r[j] = -a[j];
    return BiSeries(std::move(r));
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    std::size_t n = common_zorder(a, b);
    std::size_t qp = std::min(a.qprec(), b.qprec());
    std::vector<QSeries> r(n, QSeries::zero(qp));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i].truncated(qp) * b[j].truncated(qp);
        }
    }
    return BiSeries(std::move(r));
}

BiSeries operator*(const QSeries& s, const BiSeries& a) {
    std::size_t qp = std::min(s.prec(), a.qprec());
    std::vector<QSeries> r(a.zorder());
    for (std::size_t j = 0; j < a.zorder(); ++j)
        r[j] = s * a[j].truncated(qp);
    return BiSeries(std::move(r));
}

BiSeries operator*(const Rat& s, const BiSeries& a) {
    std::vector<QSeries> r(a.zorder());
    for (std::size_t j = 0; j < a.zorder(); ++j) r[j] = s * a[j];
    return BiSeries(std::move(r));
}

BiSeries invert_unit(const BiSeries& a) {
    std::size_t n = a.zorder();
    if (n == 0) return a;
    QSeries inv0 = invert_unit(a[0]);
    std::vector<QSeries> b(n, QSeries::zero(a.qprec()));
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        QSeries s = QSeries::zero(a.qprec());
        for (std::size_t i = 1; i <= k; ++i)
            if (!a[i].is_zero()) s += a[i] * b[k - i];
        b[k] = -(inv0 * s);
    }
    return BiSeries(std::move(b));
}

BiSeries pow(const BiSeries& a, unsigned long n) {
    BiSeries result = BiSeries::one(a.zorder(), a.qprec());
    BiSeries base = a;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

BiSeries exp(const BiSeries& a) {
    std::size_t n = a.zorder();
    if (n == 0) return a;
    if (!a[0].is_zero())
        throw BadConstantTerm("exp requires z-constant term 0");
    std::vector<QSeries> b(n, QSeries::zero(a.qprec()));
    b[0] = QSeries::one(a.qprec());
    for (std::size_t k = 1; k < n; ++k) {
        QSeries s = QSeries::zero(a.qprec());
        for (std::size_t i = 1; i <= k; ++i)
            if (!a[i].is_zero())
                s += Rat(static_cast<long>(i)) * (a[i] * b[k - i]);
        b[k] = make_rat(1, static_cast<long>(k)) * s;
    }
    return BiSeries(std::move(b));
}

BiSeries log(const BiSeries& a) {
    std::size_t n = a.zorder();
    if (n == 0) return a;
    if (!(a[0] == QSeries::one(a.qprec())))
        throw BadConstantTerm("log requires z-constant term 1");
    std::vector<QSeries> l(n, QSeries::zero(a.qprec()));
    for (std::size_t k = 1; k < n; ++k) {
        QSeries s = Rat(static_cast<long>(k)) * a[k];
        for (std::size_t i = 1; i < k; ++i)
            if (!l[i].is_zero() && !a[k - i].is_zero())
                s -= Rat(static_cast<long>(i)) * (l[i] * a[k - i]);
        l[k] = make_rat(1, static_cast<long>(k)) * s;
    }
    return BiSeries(std::move(l));
}

}  // namespace tmf
