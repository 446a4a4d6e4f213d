#pragma once

#include <string>

#include <json.hpp>

#include "apsumma/apfun.hpp"
#include "apsumma/harness.hpp"
#include "apsumma/moduli.hpp"
#include "apsumma/summability.hpp"

namespace apsumma {

using Json = nlohmann::json;

// {"alpha": a, "terms": [{"lambda": l, "a_plus": [re, im],
//  "a_minus": [re, im]}, ...]}; the loader reports the first violated
// invariant via std::invalid_argument.
Json apfunction_to_json(const APFunction& f);
APFunction apfunction_from_json(const Json& j);

// {"family": name, "n": int, "params": {...}} or {"explicit": [...]}.
Json matrix_row_to_json(const MatrixRow& row);
MatrixRow matrix_row_from_json(const Json& j);

Json modulus_to_json(const ModulusFunction& w);
ModulusFunction modulus_from_json(const Json& j);

Json sweep_config_to_json(const SweepConfig& cfg);
SweepConfig sweep_config_from_json(const Json& j);

std::string class_reports_to_csv(
    const std::vector<std::pair<long, ClassReport>>& rows);

}  // namespace apsumma
