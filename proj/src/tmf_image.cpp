#include "tmf/tmf_image.hpp"

#include <numeric>

namespace tmf {

Int image_scale(int i, int j, int k) {
    if (j == 1) return 2;
    if (i > 0) return 1;
    if (k == 0) return 1;  // the unit
    return 24 / std::gcd(24, k);
}

std::vector<ImageBasisElement> image_basis(long weight) {
    std::vector<ImageBasisElement> basis;
    for (const auto& [i, j, k] : weight_basis(weight))
        basis.push_back({i, j, k, image_scale(i, j, k)});
    return basis;
}

ImageVerdict in_image(const ModularForm& f) {
    ModularFormDecomposition d = decompose(f);
    ImageVerdict v;
    v.weight = f.weight;
    v.pass = true;
    for (const auto& [i, j, k] : weight_basis(f.weight)) {
        ImageCertificateEntry e;
        e.i = i;
        e.j = j;
        e.k = k;
        e.scale = image_scale(i, j, k);
        auto it = d.coords.find({i, j, k});
        if (it != d.coords.end()) e.coord = it->second;
        Rat quotient = e.coord / Rat(e.scale);
        e.ok = is_integer(quotient);
        if (!e.ok) v.pass = false;
        v.certificate.push_back(std::move(e));
    }
    return v;
}

ThetaImageReport theta_image_check(const GramLattice& g,
                                   unsigned long budget) {
    long weight = g.dim / 2;
    // Enough coefficients to pin every Delta-power coordinate, plus one
    // beyond for the decomposition's remainder check.
    std::size_t prec = static_cast<std::size_t>(weight / 12) + 2;
    ThetaImageReport rep;
    rep.weight = weight;
    rep.verdict = in_image(theta(g, prec, budget));
    return rep;
}

HomotopyTable reference_tables() {
    HomotopyTable t;
    t.stems = {"Z",          "Z/2",   "Z/2",         "Z/24",
               "0",          "0",     "Z/2",         "Z/240",
               "Z/2 + Z/2",  "Z/2 + Z/2 + Z/2",      "Z/6",
               "Z/504",      "0",     "Z/3",         "Z/2 + Z/2",
               "Z/2 + Z/480"};
    t.tmf = {"Z",   "Z/2", "Z/2", "Z/24", "0",   "0", "Z/2", "0",
             "Z + Z/2",   "Z/2 + Z/2",   "Z/6", "0", "Z",   "Z/3",
             "Z/2", "Z/2"};
    t.iso_note = "isomorphism in dimensions <= 6";
    return t;
}

}  // namespace tmf
