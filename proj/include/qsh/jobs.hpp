#pragma once

#include <json.hpp>
#include <string_view>

#include "qsh/fgl.hpp"
#include "qsh/quiver.hpp"
#include "qsh/shuffle.hpp"

namespace qsh::jobs {

using json = nlohmann::ordered_json;

enum ExitCode : int { Ok = 0, VerificationFailed = 1, Malformed = 2, Limit = 3 };

struct Result {
  json output;
  int exit_code = Ok;
};

// One job object, or an array of them (results in order, exit code the max).
Result run(const json& input);
Result run_text(std::string_view text);

// Schema pieces, exposed for tests and for the subcommand front end.
Quiver parse_quiver(const json& j);
FormalGroupLaw parse_fgl(const json& j);
// "0", "e" (single-vertex quivers), "e1", "2e1+e3", or "1:2,3:1".
DimVector parse_dim(std::string_view text, const Quiver& q);
DimVector parse_dim_json(const json& j, const Quiver& q);
// "EXPR@DIM" or {"dim": ..., "num": "...", "den": "..."}.
ShuffleElement parse_element(const json& j, const Quiver& q);
json element_json(const ShuffleElement& e);
json ratfunc_json(const RatFunc& f);

// The commands and, for each, the keys it accepts besides "command" and "id".
const std::vector<std::pair<std::string, std::vector<std::string>>>& command_keys();

}  // namespace qsh::jobs
