#pragma once

#include <vector>

#include "tmf/qseries.hpp"

namespace tmf {

// Truncated series sum_j c_j(q) z^j with QSeries coefficients, the carrier
// for two-variable expansions in x = 2*pi*i*z (so coefficients stay rational).
// Every term carries the same q-precision; zorder() is the number of known
// z-coefficients.
class BiSeries {
  public:
    BiSeries() = default;
    BiSeries(std::vector<QSeries> terms);

    static BiSeries zero(std::size_t zorder, std::size_t qprec);
    static BiSeries one(std::size_t zorder, std::size_t qprec);
    // e^{c z} truncated at z^zorder (coefficients constant in q).
    static BiSeries exponential(const Rat& c, std::size_t zorder,
                                std::size_t qprec);

    std::size_t zorder() const { return t_.size(); }
    std::size_t qprec() const { return t_.empty() ? 0 : t_[0].prec(); }
    const QSeries& operator[](std::size_t j) const { return t_[j]; }
    QSeries& operator[](std::size_t j) { return t_[j]; }
    const std::vector<QSeries>& terms() const { return t_; }

    BiSeries truncated_z(std::size_t zorder) const;
    // Divide by z^k; the low k z-terms must vanish identically.
    BiSeries shift_down_z(std::size_t k) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const QSeries& s, const BiSeries& a);
    friend BiSeries operator*(const Rat& s, const BiSeries& a);

    BiSeries& operator+=(const BiSeries& b) { return *this = *this + b; }
    BiSeries& operator-=(const BiSeries& b) { return *this = *this - b; }
    BiSeries& operator*=(const BiSeries& b) { return *this = *this * b; }

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.t_ == b.t_;
    }

  private:
    std::vector<QSeries> t_;
};

// Inverse of a BiSeries whose z-constant term is a q-unit.
BiSeries invert_unit(const BiSeries& a);

BiSeries pow(const BiSeries& a, unsigned long n);

// Formal exp/log in z; same contracts as the QSeries versions
// (z-constant term 0 resp. 1, as q-series).
BiSeries exp(const BiSeries& a);
BiSeries log(const BiSeries& a);

}  // namespace tmf
