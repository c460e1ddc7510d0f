#pragma once

#include "json.hpp"
#include "tmf/lattice.hpp"
#include "tmf/modforms.hpp"
#include "tmf/padic.hpp"
#include "tmf/tmf_image.hpp"

namespace tmf {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "tmf-forms/1";

// {"schema": "tmf-forms/1", "prec": N, "coeffs": ["num/den", ...]}
Json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// {"schema": ..., "dim": n, "gram": [[int, ...], ...]}
Json gram_to_json(const GramLattice& g);
GramLattice gram_from_json(const Json& j);

// {"schema": ..., "weight": w,
//  "coords": [{"i":..,"j":..,"k":..,"c":"num/den"}, ...]}
Json decomposition_to_json(const ModularFormDecomposition& d);
ModularFormDecomposition decomposition_from_json(const Json& j);

Json shell_counts_to_json(const ShellTable& t);
Json borcherds_to_json(const BorcherdsReport& r);
Json quadref_to_json(const QuadRefinementReport& r);
Json congruence_reports_to_json(const std::vector<CongruenceReport>& rs);
Json image_verdict_to_json(const ImageVerdict& v);
Json pi23_to_json(const Pi23Report& r);
Json tables_to_json(const HomotopyTable& t);

// Reads a whole file as JSON; throws ParseError with the filename.
Json load_json_file(const std::string& path);

}  // namespace tmf
