#pragma once

#include <array>
#include <string>
#include <vector>

#include "tmf/lattice.hpp"
#include "tmf/modforms.hpp"

namespace tmf {

// Scaled monomial a c4^i c6^j Delta^k spanning the image of the stable
// homotopy of tmf in modular forms.
struct ImageBasisElement {
    int i = 0, j = 0, k = 0;
    Int scale;  // a_{i,j,k}
};

// a = 1 when i > 0 and j = 0; a = 2 when j = 1; a = 24/gcd(24,k) when
// i = j = 0 with k > 0; the weight-0 unit has a = 1.
Int image_scale(int i, int j, int k);

std::vector<ImageBasisElement> image_basis(long weight);

struct ImageCertificateEntry {
    int i = 0, j = 0, k = 0;
    Rat coord;
    Int scale;
    bool ok = false;  // coord is an integer multiple of scale
};

struct ImageVerdict {
    long weight = 0;
    bool pass = false;
    std::vector<ImageCertificateEntry> certificate;
};

// PASS iff every coordinate of decompose(f) is an integer multiple of the
// corresponding scale.  Propagates decomposition errors.
ImageVerdict in_image(const ModularForm& f);

struct ThetaImageReport {
    long weight = 0;
    ImageVerdict verdict;
};

// theta_L lies in the image for every even unimodular lattice; for
// dimensions divisible by 24 this subsumes the mod-24 congruence on the
// Delta^k coordinate.
ThetaImageReport theta_image_check(
    const GramLattice& g, unsigned long budget = kDefaultEnumerationBudget);

// The two reference tables for 0 <= k <= 15: stable stems and the homotopy
// of tmf, plus the range where the tmf-degree map is an isomorphism.
struct HomotopyTable {
    std::array<std::string, 16> stems;
    std::array<std::string, 16> tmf;
    std::string iso_note;
};

HomotopyTable reference_tables();

}  // namespace tmf
