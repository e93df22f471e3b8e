#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "shapecone/decompose.hpp"
#include "shapecone/exactnum.hpp"
#include "shapecone/generators.hpp"
#include "shapecone/shapes.hpp"

namespace shapecone {

// Exact text formats. Entries are always "p/q" strings in lowest terms
// ("p" when the denominator is 1). With `common_denominator`, rows hold
// integers and a separate scale 1/D (D the lcm of all denominators) is
// emitted: a "scale" member in JSON, a leading "# scale 1/D" line in CSV.
// Readers apply the scale, so both layouts read back to the same values.

/// {"n": cols, "rows": [["p/q", ...], ...]}
nlohmann::json matrix_to_json(const RMatrix& m, bool common_denominator = false);
RMatrix matrix_from_json(const nlohmann::json& j);

std::string matrix_to_csv(const RMatrix& m, bool common_denominator = false);
RMatrix matrix_from_csv(std::string_view text);

/// {"n": n, "labels": [...], "rows": [[...], ...]}
nlohmann::json generators_to_json(const GeneratorSet& g,
                                  bool common_denominator = false);
/// One line per generator: label, then the entries.
std::string generators_to_csv(const GeneratorSet& g,
                              bool common_denominator = false);

/// {"verdict": "in_cone"|"out_of_cone", "witness": ...}. An in-cone witness
/// carries labels and coefficients (plus baseline/lambda/theta for the
/// convex canonical form); an out-of-cone witness names the violated
/// shape and its 1-based index.
nlohmann::json certificate_to_json(const MembershipCertificate& c);

nlohmann::json report_to_json(const ShapeReport& r);

std::string to_string(Verdict v);

}  // namespace shapecone
