#pragma once

// JSON formats: expansion files, module descriptions and reports.

#include <string>

#include <json.hpp>

#include "gsp4/commalg.hpp"
#include "gsp4/qexp.hpp"
#include "gsp4/report.hpp"

namespace gsp4 {

using Json = nlohmann::json;

/// Malformed input: missing or unknown keys, wrong types, invalid values.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"p", "mod_exp", "weight": [j, k], "precision", "coeffs": [{"m","r","n","vec"}]}
/// with coeffs in ascending (m, r, n) order and zero vectors omitted.
Json expansion_to_json(const SiegelExpansion& e);
/// Coefficients are reduced mod p^m; unknown keys are rejected.
SiegelExpansion expansion_from_json(const Json& j);

/// {"p", "N", "q", "dim", "gens": [matrices as lists of rows]}.
Json module_to_json(const GroupRingModule& m);
GroupRingModule module_from_json(const Json& j);

Json report_to_json(const Report& r);

Json read_json_file(const std::string& path);
/// Canonical form: sorted keys, two-space indent, trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace gsp4
