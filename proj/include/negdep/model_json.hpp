#pragma once

#include <json.hpp>

#include "negdep/tournaments.hpp"

namespace negdep {

/// Knockout:
///   {"model": "knockout", "ell": 2,
///    "win_prob": [["0","1/2",...], ...]   (rows, or one flat row-major array),
///    "draw": {"kind": "fixed", "bracket": [1,2,3,4]} | {"kind": "random"}}
/// Round robin:
///   {"model": "round_robin", "players": 3,
///    "pairs": [{"i": 1, "j": 2, "r": "1", "law": [["0","1/2"],["1","1/2"]]}, ...]}
/// Player numbers are one-based.
ModelSpec model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const ModelSpec& spec);

}  // namespace negdep
