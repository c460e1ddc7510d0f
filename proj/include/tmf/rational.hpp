#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

#include "tmf/errors.hpp"

namespace tmf {

// Exact arithmetic lives on GMP.  mpq_class keeps values canonical
// (lowest terms, positive denominator) through all ring operations.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(),
               r.get_den().get_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(),
               r.get_den().get_mpz_t());
    return q;
}

// Parses "num/den" or "num" (decimal strings, optional leading '-').
Rat parse_rat(const std::string& s);

// Formats as "num/den", or plain "num" when the denominator is 1.
std::string format_rat(const Rat& r);

bool is_prime(const Int& n);
inline bool is_prime(long n) { return is_prime(Int(n)); }

// p-adic valuation of a rational; +infinity (represented as the flag) for 0.
struct PadicValuation {
    Int prime;
    long value = 0;
    bool infinite = false;  // set iff the valuated rational is 0

    bool at_least(long bound) const { return infinite || value >= bound; }
    std::string str() const {
        return infinite ? "+inf" : std::to_string(value);
    }
};

PadicValuation valuation(const Rat& x, const Int& p);
inline PadicValuation valuation(const Rat& x, long p) {
    return valuation(x, Int(p));
}

}  // namespace tmf
