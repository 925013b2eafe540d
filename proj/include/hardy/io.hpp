#pragma once

// JSON encoding of function specs and complex values.
//
//   {"blaschke": {"zeros": [{"re": 0.5, "im": 0}], "rotation": {"re": 1, "im": 0}},
//    "atoms": [{"mass": 1, "point": {"re": 1, "im": 0}}],
//    "outer_poly": [{"re": 1, "im": 0}, 0.5]}
//
// Every field is optional. Complex values are written as {"re", "im"}; plain
// numbers are accepted on input.

#include <json.hpp>
#include <string>
#include <vector>

#include "hardy/functions.hpp"

namespace hardy {

using json = nlohmann::json;

json to_json(cplx z);
json to_json(const std::vector<cplx>& zs);
json to_json(const FunctionSpec& f);

/// Throws InvalidArgument on malformed input.
cplx complex_from_json(const json& j);
std::vector<cplx> complex_list_from_json(const json& j);
FunctionSpec spec_from_json(const json& j);

/// "0.5,-0.5,0.3" -> {0.5, -0.5, 0.3}.
std::vector<cplx> parse_zero_list(const std::string& text);

/// Parses text as JSON when it starts with '{' or '[', otherwise reads it as a file path.
json load_json_input(const std::string& path_or_inline);

}  // namespace hardy
