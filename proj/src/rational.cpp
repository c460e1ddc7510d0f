#include "tmf/rational.hpp"

namespace tmf {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int num(s, 10);
            return Rat(num);
        }
        Int num(s.substr(0, slash), 10);
        Int den(s.substr(slash + 1), 10);
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: \"" + s + "\"");
    }
}

std::string format_rat(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PadicValuation valuation(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw NotPrime(p.get_si());
    PadicValuation v{p, 0, false};
    if (x == 0) {
        v.infinite = true;
        return v;
    }
    Int num = x.get_num();
    Int den = x.get_den();
    mpz_class rem;
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        ++v.value;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        --v.value;
    }
    return v;
}

}  // namespace tmf
