#pragma once

#include <string>

#include <json.hpp>

#include "onerule/adyan.hpp"
#include "onerule/classify.hpp"
#include "onerule/oracle.hpp"
#include "onerule/witness.hpp"

namespace onerule::cli {

using nlohmann::ordered_json;

ordered_json to_json(const Alphabet& alphabet);
ordered_json to_json(const AdyanStage& stage);
ordered_json to_json(const AdyanChain& chain);
ordered_json to_json(const Classification& c);
ordered_json to_json(const WitnessDiamond& d);
ordered_json to_json(const DiamondExample& e);

// Vertices labeled by their words (the empty word as "ε"), edges by positions.
std::string to_dot(const WitnessDiamond& d, const std::string& title = "diamond");

}  // namespace onerule::cli
