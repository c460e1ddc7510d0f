#pragma once

#include <map>
#include <string>
#include <vector>

#include "tmf/modforms.hpp"
#include "tmf/qseries.hpp"

namespace tmf {

// Positive definite even unimodular lattice given by its Gram matrix.
struct GramLattice {
    int dim = 0;
    std::vector<std::vector<long>> gram;
};

// Built-in Gram matrices for the canonical examples.
GramLattice builtin_lattice(const std::string& name);  // e8, d16plus,
                                                       // e8cubed, leech

// Throws NotSymmetric / NotEven / NotUnimodular / NotPositiveDefinite with
// the offending entry or minor named in the message.
void validate(const GramLattice& g);

struct LatticeVector {
    std::vector<long> coords;
};

// All vectors of even norm <= max_norm, folded under l <-> -l: shells hold
// one representative per +- pair (counts include both signs; the zero
// vector counts once).  Representatives are sorted lexicographically.
struct ShellTable {
    long max_norm = 0;
    std::map<long, std::vector<std::vector<long>>> shells;
    std::map<long, Int> counts;
};

inline constexpr unsigned long kDefaultEnumerationBudget = 1000000;

// Depth-first bounded enumeration from the exact-rational LDL decomposition
// of the Gram matrix (Fincke-Pohst); interval endpoints are integer square
// roots corrected by exact comparisons, so no boundary vector is ever
// miscounted.  Throws BudgetExceeded past the representative ceiling.
ShellTable enumerate(const GramLattice& g, long max_norm,
                     unsigned long budget = kDefaultEnumerationBudget);

long inner(const GramLattice& g, const std::vector<long>& a,
           const std::vector<long>& b);

// theta_L = sum_n L_n q^n, weight dim/2.  The _from_table variants reuse a
// shell table enumerated to norm >= 2(prec-1).
ModularForm theta(const GramLattice& g, std::size_t prec,
                  unsigned long budget = kDefaultEnumerationBudget);
ModularForm theta_from_table(const GramLattice& g, const ShellTable& t,
                             std::size_t prec);

// theta_mu = sum_l q^{<l,l>/2} <l,mu>^2/2
//              + <mu,mu> theta_L sum_m sigma_1(m) q^m,
// weight dim/2 + 2; the correction term is the one that makes
// phi^(2) = theta_mu - (<mu,mu>/24) theta_L hold on the nose.
ModularForm theta_mu(const GramLattice& g, const LatticeVector& mu,
                     std::size_t prec,
                     unsigned long budget = kDefaultEnumerationBudget);
ModularForm theta_mu_from_table(const GramLattice& g, const ShellTable& t,
                                const LatticeVector& mu, std::size_t prec);

// Coefficients phi^(0), phi^(2), ..., phi^(2t) with 2t <= xorder, from
// phi_mu = x^{-<mu,mu>} (phi^(0) + phi^(2) x^2 + ...): the theta-kernel
// sum_l q^{<l,l>/2} e^{<mu,l> x} divided by sigma(q,e^x)^{<mu,mu>}.
// Odd x-powers must cancel under the +-l fold; a survivor throws
// OddTermResidual.
std::vector<QSeries> phi_mu(const GramLattice& g, const LatticeVector& mu,
                            std::size_t qprec, std::size_t xorder,
                            unsigned long budget = kDefaultEnumerationBudget);
std::vector<QSeries> phi_mu_from_table(const GramLattice& g,
                                       const ShellTable& t,
                                       const LatticeVector& mu,
                                       std::size_t qprec,
                                       std::size_t xorder);

struct BorcherdsReport {
    long k = 0;           // dim / 24
    Rat x_k;              // Delta^k coordinate of theta_L
    Rat residue;          // res_{q=0} theta_L / Delta^k dq/q
    bool x_k_divisible = false;      // x_k == 0 mod 24
    bool residue_divisible = false;  // residue == 0 mod 24
    bool paths_agree = false;        // x_k == residue mod 24
    bool pass = false;
};

// Both proofs of the mod-24 congruence on the Delta^k coordinate of
// theta_L for a 24k-dimensional lattice: the direct decomposition and the
// residue route.  Throws DimensionNot24k.
BorcherdsReport borcherds_check(
    const GramLattice& g,
    unsigned long budget = kDefaultEnumerationBudget);

struct QuadRefinementReport {
    long k = 0;
    Rat residue_mu;     // res theta_mu / Delta^k dq/q  (an integer)
    Rat residue_L;      // res theta_L / Delta^k dq/q
    long norm_mu = 0;   // <mu,mu>
    bool main_residue_holds = false;  // residue_mu == (norm/24) residue_L
    int p_mu = 0;       // residue_mu mod 2
};

// The quadratic refinement p(mu) = res(theta_mu/Delta^k dq/q) mod 2,
// together with the exact residue identity it rests on.  Throws
// NonIntegralResidue if the residue fails to be an integer.
QuadRefinementReport quad_refinement(
    const GramLattice& g, const LatticeVector& mu,
    unsigned long budget = kDefaultEnumerationBudget);
QuadRefinementReport quad_refinement_from_table(const GramLattice& g,
                                                const ShellTable& t,
                                                const LatticeVector& mu);

}  // namespace tmf
