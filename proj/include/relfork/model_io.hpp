#pragma once

// JSON model files:
//   {"base_size": n, "full": bool, "carrier": [[[a,b],...], ...],
//    "unit": [[a,b],...], "identity": "auto" | [[a,b],...]}
// and the shorthand "full:n".

#include <string>

#include "relfork/relcore.hpp"

namespace relfork {

AlgebraModel model_from_json_text(const std::string& text);
AlgebraModel load_model(const std::string& source);  // "full:n" or a file path
std::string model_to_json_text(const AlgebraModel& m);

}  // namespace relfork
