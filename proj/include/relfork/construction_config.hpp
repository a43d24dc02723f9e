#pragma once

// JSON construction configs:
//   {"kind": "basic"|"tree"|"pi"|"rho"|"seq", "S": [ints],
//    "control": "(bin nil nil)" | "pi.rho"}

#include <memory>
#include <string>
#include <vector>

#include "relfork/constructions.hpp"

namespace relfork {

struct ConstructionConfig {
  StarKind kind = StarKind::Basic;
  std::vector<Nat> S;
  std::string control;  // tree text for "tree", sequence text for "seq"
};

ConstructionConfig config_from_json_text(const std::string& text);
ConstructionConfig load_config(const std::string& path);
std::string config_to_json_text(const ConstructionConfig& c);

std::shared_ptr<const Construction> build(const ConstructionConfig& c);

}  // namespace relfork
