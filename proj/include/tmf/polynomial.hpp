#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "tmf/rational.hpp"

namespace tmf {

// Multivariate polynomial over Q in the fixed variable slots
// a1, a2, a3, a4, a6, r, s, t -- enough for the universal Weierstrass
// curve and a symbolic transformation.  Exponent vectors are stored as
// fixed-width arrays; terms live in an ordered map so printing and
// equality are canonical.
class Poly {
  public:
    static constexpr int kVars = 8;
    using Key = std::array<std::uint8_t, kVars>;

    static const std::array<const char*, kVars>& var_names();

    Poly() = default;
    Poly(const Rat& c) {
        if (c != 0) terms_[Key{}] = c;
    }
    Poly(long c) : Poly(Rat(c)) {}

    static Poly variable(int slot);
    // Convenience accessors for the curve coefficients.
    static Poly a1() { return variable(0); }
    static Poly a2() { return variable(1); }
    static Poly a3() { return variable(2); }
    static Poly a4() { return variable(3); }
    static Poly a6() { return variable(4); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (valid for any polynomial).
    Rat constant_value() const;

    const std::map<Key, Rat>& terms() const { return terms_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    std::map<Key, Rat> terms_;
    void prune(const Key& k);
};

}  // namespace tmf
