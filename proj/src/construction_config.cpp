#include "relfork/construction_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "relfork/error.hpp"

namespace relfork {

using nlohmann::json;

ConstructionConfig config_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("bad-config", std::string("construction config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw Error("bad-config", "construction config needs a string \"kind\"");
  }
  ConstructionConfig c;
  c.kind = parse_star_kind(doc["kind"].get<std::string>());
  if (doc.contains("S")) {
    if (!doc["S"].is_array()) throw Error("bad-config", "\"S\" must be an array of naturals");
    for (const auto& x : doc["S"]) {
      if (x.is_number_unsigned()) c.S.emplace_back(x.get<std::uint64_t>());
      else if (x.is_string()) c.S.push_back(parse_nat(x.get<std::string>()));
      else throw Error("bad-config", "\"S\" must contain naturals, got " + x.dump());
    }
    std::sort(c.S.begin(), c.S.end());
    c.S.erase(std::unique(c.S.begin(), c.S.end()), c.S.end());
  }
  if (doc.contains("control")) {
    if (!doc["control"].is_string()) throw Error("bad-config", "\"control\" must be a string");
    c.control = doc["control"].get<std::string>();
  }
  return c;
}

ConstructionConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("bad-file", "cannot open construction config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

std::string config_to_json_text(const ConstructionConfig& c) {
  json doc;
  doc["kind"] = to_string(c.kind);
  json s = json::array();
  for (const auto& x : c.S) {
    if (x <= std::numeric_limits<std::uint64_t>::max()) s.push_back(static_cast<std::uint64_t>(x));
    else s.push_back(x.str());
  }
  doc["S"] = s;
  if (c.kind == StarKind::Tree || c.kind == StarKind::Seq) doc["control"] = c.control;
  return doc.dump(2);
}

std::shared_ptr<const Construction> build(const ConstructionConfig& c) {
  switch (c.kind) {
    case StarKind::Basic: return Construction::basic(c.S);
    case StarKind::Tree:
      if (c.control.empty()) throw Error("bad-config", "tree construction needs a control tree");
      return Construction::tree(c.S, BT::parse(c.control));
    case StarKind::Pi: return Construction::proj(c.S, Proj::Pi);
    case StarKind::Rho: return Construction::proj(c.S, Proj::Rho);
    case StarKind::Seq:
      if (c.control.empty()) throw Error("bad-config", "sequence construction needs a control sequence");
      return Construction::seq(c.S, Seq::parse(c.control));
  }
  throw Error("internal", "unknown construction kind");
}

}  // namespace relfork
