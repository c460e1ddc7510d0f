#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tmf/biseries.hpp"
#include "tmf/modforms.hpp"
#include "tmf/qseries.hpp"

namespace tmf {

// f|U = sum a_{pn} q^n.  Output precision floor((prec-1)/p) + 1.
QSeries atkin_U(const QSeries& f, long p);

// f|V = sum a_n q^{pn}.  Output precision p(prec-1) + 1.
QSeries versch_V(const QSeries& f, long p);

// f* = f - p^{weight-1} f|V, truncated to f's precision.
QSeries star(const QSeries& f, long weight, long p);

// G*_2k directly from its displayed expansion: constant term
// -(1 - p^{2k-1}) B_2k / 4k, then the p-deprived divisor sums
// sigma*_{2k-1}(n) over divisors coprime to p.  Must coincide with
// star(eisenstein(2k), 2k, p).
ModularForm eisenstein_star(long two_k, long p, std::size_t prec);

// sum_{d | n, p does not divide d} d^e
Int sigma_divisor_deprived(unsigned long n, unsigned long e, long p);

// Characteristic sequence of a genus: rational entries for the KO story,
// q-series entries for the tmf story; indexed by even n.
struct RationalCharSequence {
    std::map<long, Rat> entries;
};
struct SeriesCharSequence {
    std::map<long, QSeries> entries;
};

// The A-hat sequence b_n = B_n / 2n for even n <= nmax.
RationalCharSequence canonical_ko_sequence(long nmax);

struct CongruenceReport {
    std::string condition;  // "i", "ii", "iii", "iv"
    long p = 0, c = 0, k = 0;
    long m = 0, n = 0;      // pair indices ("i"/"iv" use n only)
    long required = 0;      // valuation bound; 0 for "i"/"iv"
    PadicValuation val;     // valuation of the difference ("ii"/"iii")
    std::string detail;
    bool pass = false;
};

// Kummer-congruence battery on a rational characteristic sequence:
// (i)  b_n == B_n/2n mod Z for every entry;
// (ii) odd p, pairs with m == n mod p^k(p-1):
//      (1-c^n)(1-p^{n-1}) b_n == (1-c^m)(1-p^{m-1}) b_m mod p^{k+1};
// (iii) p = 2, pairs with m == n mod 2^k, same display mod 2^{k+2}.
// Congruences between rationals are judged by the p-adic valuation of the
// exact difference; a surviving pole fails with the valuation as witness.
std::vector<CongruenceReport> kummer_check_ko(
    const RationalCharSequence& b, long p, long c, long k,
    const std::vector<std::pair<long, long>>& pairs);

// The series analogue, coefficient-by-coefficient:
// (i)  g_n - G_n integral;
// (ii)/(iii)  (1-c^n) g*_n == (1-c^m) g*_m  mod p^{k+1} resp. 2^{k+2},
//      with g*_n = star(g_n, weight, p) using weightmap[n];
// (iv) g*_n | U = g*_n to the available precision.
std::vector<CongruenceReport> kummer_check_tmf(
    const SeriesCharSequence& g, long p, long c, long k,
    const std::vector<std::pair<long, long>>& pairs,
    const std::map<long, long>& weightmap);

// sigma(q, e^z)/z: the characteristic series whose sequence under
// extract_char_sequence is (0, *, G_4, G_6, ...) -- the Witten genus.
// Even in z, z^0 q^0 coefficient 1.
BiSeries witten_series(std::size_t qprec, std::size_t zorder);

// (z/2)/sinh(z/2): the A-hat series, q-independent; its sequence is
// b_2 = 1/24 = B_2/4, b_4 = -1/240 = B_4/8, ...
BiSeries ko_series(std::size_t zorder, std::size_t qprec = 1);

// entries[n] = -(n!/2) [z^n] log K, even n in [2, nmax].  Requires the
// z^0 q^0 coefficient of K to be 1 (BadNormalization).
SeriesCharSequence extract_char_sequence(const BiSeries& K, long nmax);

// Primes p <= bound with tau(p) == 1 mod p, tau from the Delta expansion.
std::vector<long> tau_search(long bound);

struct Pi23Report {
    long p = 0;
    Int tau_p;
    long torsion_valuation = 0;  // v_p(tau(p) - 1); 0 for p = 691
    bool torsion_trivial = true;
    std::string description;     // "Z_p" or "Z_p + Z/p^v"
};

// The 23-stem of the tmf-fiber at p: free rank 1, plus cyclic torsion of
// order p^{v_p(tau(p)-1)} when p != 691; no torsion at p = 691.
Pi23Report pi23_torsion(long p);

}  // namespace tmf
