#include "tmf/qseries.hpp"

#include <algorithm>

namespace tmf {

QSeries QSeries::power_of_q(std::size_t k, std::size_t prec) {
    QSeries r = zero(prec);
    if (k < prec) r.c_[k] = 1;
    return r;
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rat& x) { return x == 0; });
}

QSeries QSeries::truncated(std::size_t prec) const {
    if (prec >= c_.size()) return *this;
    return QSeries(std::vector<Rat>(c_.begin(), c_.begin() + prec));
}

QSeries QSeries::shift_up(std::size_t k) const {
    std::vector<Rat> r(c_.size() + k);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return QSeries(std::move(r));
}

QSeries QSeries::shift_down(std::size_t k) const {
    if (c_.size() < k)
        throw InsufficientPrecision("shift_down below precision");
    for (std::size_t i = 0; i < k; ++i)
        if (c_[i] != 0)
            throw Error("shift_down: nonzero coefficient below q^k");
    return QSeries(std::vector<Rat>(c_.begin() + k, c_.end()));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    std::size_t n = std::min(a.prec(), b.prec());
    std::vector<Rat> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a.c_[i] + b.c_[i];
    return QSeries(std::move(r));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    std::size_t n = std::min(a.prec(), b.prec());
    std::vector<Rat> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a.c_[i] - b.c_[i];
    return QSeries(std::move(r));
}

QSeries operator-(const QSeries& a) {
    std::vector<Rat> r(a.prec());
    for (std::size_t i = 0; i < a.prec(); ++i) r[i] = -a.c_[i];
    return QSeries(std::move(r));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    std::size_t n = std::min(a.prec(), b.prec());
    std::vector<Rat> r(n);
    Rat t;
    for (std::size_t i = 0; i < n && i < a.prec(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n && j < b.prec(); ++j) {
            if (b.c_[j] == 0) continue;
            t = a.c_[i] * b.c_[j];
            r[i + j] += t;
        }
    }
    return QSeries(std::move(r));
}

QSeries operator*(const Rat& s, const QSeries& a) {
    std::vector<Rat> r(a.prec());
    for (std::size_t i = 0; i < a.prec(); ++i) r[i] = s * a.c_[i];
    return QSeries(std::move(r));
}

bool agree_to_common_prec(const QSeries& a, const QSeries& b) {
    std::size_t n = std::min(a.prec(), b.prec());
    for (std::size_t i = 0; i < n; ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

QSeries invert_unit(const QSeries& a) {
    std::size_t n = a.prec();
    if (n == 0) return a;
    if (a[0] == 0) throw ZeroConstantTerm();
    std::vector<Rat> b(n);
    Rat inv0 = 1 / a[0];
    b[0] = inv0;
    // forward substitution on a*b = 1
    for (std::size_t k = 1; k < n; ++k) {
        Rat s = 0;
        for (std::size_t i = 1; i <= k; ++i)
            if (i < a.prec() && a[i] != 0) s += a[i] * b[k - i];
        b[k] = -inv0 * s;
    }
    return QSeries(std::move(b));
}

QSeries pow(const QSeries& a, unsigned long n) {
    QSeries result = QSeries::one(a.prec());
    QSeries base = a;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

QSeries exp(const QSeries& a) {
    std::size_t n = a.prec();
    if (n == 0) return a;
    if (a[0] != 0)
        throw BadConstantTerm("exp requires constant term 0");
    // b' = a' b, i.e. k*b_k = sum_{i=1..k} i*a_i*b_{k-i}
    std::vector<Rat> b(n);
    b[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Rat s = 0;
        for (std::size_t i = 1; i <= k; ++i)
            if (a[i] != 0) s += Rat(static_cast<long>(i)) * a[i] * b[k - i];
        b[k] = s / Rat(static_cast<long>(k));
    }
    return QSeries(std::move(b));
}

QSeries log(const QSeries& a) {
    std::size_t n = a.prec();
    if (n == 0) return a;
    if (a[0] != 1)
        throw BadConstantTerm("log requires constant term 1");
    // l' = a'/a, i.e. k*a_k = k*l_k + sum_{i=1..k-1} i*l_i*a_{k-i}
    std::vector<Rat> l(n);
    for (std::size_t k = 1; k < n; ++k) {
        Rat s = Rat(static_cast<long>(k)) * a[k];
        for (std::size_t i = 1; i < k; ++i)
            if (l[i] != 0 && a[k - i] != 0)
                s -= Rat(static_cast<long>(i)) * l[i] * a[k - i];
        l[k] = s / Rat(static_cast<long>(k));
    }
    return QSeries(std::move(l));
}

std::vector<Int> reduce_mod(const QSeries& a, const Int& m) {
    if (m <= 0) throw Error("modulus must be positive");
    std::vector<Int> r(a.prec());
    for (std::size_t i = 0; i < a.prec(); ++i) {
        const Int& num = a[i].get_num();
        const Int& den = a[i].get_den();
        Int dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
            throw DenominatorNotInvertible(
                static_cast<long>(i),
                "denominator " + den.get_str() + " not invertible mod " +
                    m.get_str() + " at index " + std::to_string(i));
        Int v = num * dinv;
        mpz_mod(r[i].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    }
    return r;
}

}  // namespace tmf
