#pragma once

#include <string>

#include <json.hpp>

#include "logcoef/extremal.hpp"
#include "logcoef/search.hpp"
#include "logcoef/verify.hpp"

namespace logcoef {

/// Serialize with floating values at 17 significant digits (%.17g), keys in
/// sorted order, two-space indent. Identical values give identical bytes.
std::string dump_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const ExtremalWitness& w);

}  // namespace logcoef
