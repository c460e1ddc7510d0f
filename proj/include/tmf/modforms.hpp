#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tmf/qseries.hpp"

namespace tmf {

// B_0..B_nmax from x/(e^x - 1).
struct BernoulliTable {
    std::vector<Rat> values;
    const Rat& operator[](std::size_t n) const { return values[n]; }
    std::size_t size() const { return values.size(); }
};

BernoulliTable bernoulli(std::size_t nmax);

// Level-1 modular form as a q-expansion with its weight.
struct ModularForm {
    long weight = 0;
    QSeries series;
};

// Un-normalized Eisenstein series G_2k = -B_2k/4k + sum sigma_{2k-1}(n) q^n.
ModularForm eisenstein(long two_k, std::size_t prec);

enum class Generator { c4, c6, delta };
Generator parse_generator(const std::string& name);

// c4 = 1 + 240 sum sigma_3 q^n, c6 = 1 - 504 sum sigma_5 q^n,
// delta = q prod (1-q^n)^24 (pentagonal-number product, then 24th power).
ModularForm generator_q(Generator which, std::size_t prec);

// sum_{d | n} d^e
Int sigma_divisor(unsigned long n, unsigned long e);

// Euler product prod_{n>=1} (1 - q^n) via the pentagonal number theorem.
QSeries euler_product(std::size_t prec);

// Ramanujan tau(1..nmax), read off the delta expansion.
std::vector<Int> tau_values(std::size_t nmax);

// Monomials c4^i c6^j Delta^k of the given weight (4i+6j+12k = weight,
// j in {0,1}), sorted by ascending k.  For each k at most one (i,j) fits.
std::vector<std::tuple<int, int, int>> weight_basis(long weight);

// q-expansion of c4^i c6^j Delta^k.
QSeries basis_monomial_q(int i, int j, int k, std::size_t prec);

struct ModularFormDecomposition {
    long weight = 0;
    // (i,j,k) -> coordinate
    std::map<std::tuple<int, int, int>, Rat> coords;
};

// Coordinates in the monomial basis; triangular in the Delta-order, so the
// first kmax+1 coefficients determine everything.  Throws NotInRing when the
// reconstruction mismatches the input within its precision.
ModularFormDecomposition decompose(const ModularForm& f);

QSeries reconstruct(const ModularFormDecomposition& d, std::size_t prec);

// q^0 coefficient of f * Delta^{-k}; requires f.series.prec >= k+1.
Rat residue_delta(const ModularForm& f, long k);

struct ResidueCongruenceReport {
    Rat x_k;        // Delta^k coordinate of f
    Rat residue;    // res_{q=0} f/Delta^k dq/q
    bool x_k_divisible = false;      // x_k == 0 mod 24
    bool residue_divisible = false;  // residue == 0 mod 24
    bool equivalent = false;         // x_k == residue mod 24
};

// Both routes to the mod-24 congruence: the Delta^k coordinate and the
// residue at q = 0; they must agree mod 24 for weight-12k forms.
ResidueCongruenceReport residue_congruence_equiv(const ModularForm& f, long k);

}  // namespace tmf
