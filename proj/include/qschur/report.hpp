#pragma once

#include "qschur/checks.hpp"
#include "qschur/combinatorics.hpp"
#include "qschur/fock.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace qschur {

using Json = nlohmann::ordered_json;

// {"-1": 1, "0": 2}; coefficients beyond 64 bits become decimal strings.
Json laurent_to_json(const LaurentInt& p);
LaurentInt laurent_from_json(const Json& j);

Json canonical_to_json(const FockConfig& cfg, const std::map<Multipartition, FockVector>& basis);
std::map<Multipartition, FockVector> canonical_from_json(const Json& j);

// {"component.row.col": "number_alphabet"}
Json tableau_to_json(const SemistandardTableau& s);
SemistandardTableau tableau_from_json(const Json& j);

std::string format_multicomposition(const Multicomposition& xi);
// "3,3,1|1,1|2,1,1"; an empty component is an empty string.
Multicomposition parse_multicomposition(const std::string& s);

Json check_to_json(const std::vector<CheckResult>& results);

// Double quotes around fields holding commas or quotes.
std::string csv_field(const std::string& s);

}  // namespace qschur
