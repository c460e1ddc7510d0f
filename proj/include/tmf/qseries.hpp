#pragma once

#include <cstddef>
#include <vector>

#include "tmf/rational.hpp"

namespace tmf {

// Truncated power series in q with exact rational coefficients.
// prec() is the number of known coefficients (indices 0..prec-1).
// A series of precision 0 is legal and absorbs every operation.
//
// Precision propagation: results carry min(prec of operands); dividing
// by q^k (shift_down) reduces precision by k.
class QSeries {
  public:
    QSeries() = default;
    explicit QSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}
    // Constant series of the given precision.
    QSeries(const Rat& value, std::size_t prec) : c_(prec) {
        if (prec > 0) c_[0] = value;
    }

    static QSeries zero(std::size_t prec) { return QSeries(Rat(0), prec); }
    static QSeries one(std::size_t prec) { return QSeries(Rat(1), prec); }
    // q^k to the given precision.
    static QSeries power_of_q(std::size_t k, std::size_t prec);

    std::size_t prec() const { return c_.size(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const;

    QSeries truncated(std::size_t prec) const;
    // Multiply by q^k; precision grows by k (low coefficients are exact).
    QSeries shift_up(std::size_t k) const;
    // Divide by q^k; requires the low k coefficients to vanish.
    // Precision shrinks by k.
    QSeries shift_down(std::size_t k) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rat& s, const QSeries& a);

    QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
    QSeries& operator-=(const QSeries& b) { return *this = *this - b; }
    QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

    // Structural equality: same precision and same coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.c_ == b.c_;
    }

    // Equality of the known common prefix.
    friend bool agree_to_common_prec(const QSeries& a, const QSeries& b);

  private:
    std::vector<Rat> c_;
};

// Multiplicative inverse of a unit series (nonzero constant term).
QSeries invert_unit(const QSeries& a);

// a^n with truncation at a.prec().
QSeries pow(const QSeries& a, unsigned long n);

// Formal exponential; requires constant term 0.
QSeries exp(const QSeries& a);

// Formal logarithm; requires constant term 1.
QSeries log(const QSeries& a);

// Coefficients reduced into [0, m); every denominator must be coprime to m.
std::vector<Int> reduce_mod(const QSeries& a, const Int& m);

}  // namespace tmf
