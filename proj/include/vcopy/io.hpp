#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "vcopy/enveloping.hpp"
#include "vcopy/lie_algebra.hpp"
#include "vcopy/polynomial.hpp"
#include "vcopy/virtual_copy.hpp"

namespace vcopy {

using Json = nlohmann::ordered_json;

/// {"names", "brackets": [{"i","j","terms": [{"k","c"}]}], "levi", "radical", "latex"}
Json algebra_to_json(const LieAlgebra& algebra);
/// Throws MalformedInput on any schema violation.
AlgebraPtr algebra_from_json(const Json& doc);

/// [{"word": [names], "coeff": "p/q"}, ...] in normal-ordered form.
Json pbw_to_json(const PbwElement& e);
/// Accepts the list form (words are literal products, normal-ordered here) or an
/// expression string such as "T^2 + R*L".
PbwElement pbw_from_json(const AlgebraPtr& algebra, const Json& doc);

Json poly_to_json(const CommPoly& p, const std::vector<std::string>& names);

Json spec_to_json(const LieAlgebra& algebra, const VirtualCopySpec& spec);
/// {"f": <pbw>, "P": {"J12": <pbw>, ...}}; throws MalformedSpec.
VirtualCopySpec spec_from_json(const AlgebraPtr& algebra, const Json& doc);

/// {"Q1": 1, "T": 1}
std::map<std::string, int> weights_from_json(const Json& doc);

/// Reads and parses a JSON file; missing files and parse errors raise MalformedInput.
Json read_json_file(const std::string& path);

}  // namespace vcopy
