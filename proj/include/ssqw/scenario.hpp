#ifndef SSQW_SCENARIO_HPP
#define SSQW_SCENARIO_HPP

#include <string>

#include <json.hpp>

#include "ssqw/model.hpp"

namespace ssqw {

// Strict scenario schema:
//   { "shift": {"p", "q_re", "q_im"},
//     "coin":  {"kind": "step"|"multistep"|"tanh", "limit_minus": {...}, "limit_plus": {...},
//               "breakpoints": [{"x","a","b_re","b_im"}], "width", "phi"} }
// Unknown keys are rejected with a SchemaError naming the key. "width"/"phi" belong to the
// tanh kind only; "breakpoints" to the piecewise kinds (optional for "step", defaulting to a
// single cut at 0 with the plus limit).
WalkSpec load_scenario(const nlohmann::json& j);
WalkSpec load_scenario_file(const std::string& path);

nlohmann::json scenario_to_json(const WalkSpec& spec);

}  // namespace ssqw

#endif
