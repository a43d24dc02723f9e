#include "relfork/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "relfork/error.hpp"

namespace relfork {

namespace {

using nlohmann::json;

FiniteRelation relation_from(const json& pairs, std::size_t n) {
  if (!pairs.is_array()) throw Error("bad-model", "a relation must be an array of pairs");
  FiniteRelation r(n);
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
      throw Error("bad-model", "pairs must be two-element arrays of naturals, got " + p.dump());
    }
    r.insert(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  return r;
}

json relation_to(const FiniteRelation& r) {
  json out = json::array();
  for (const auto& [a, b] : r.pairs()) out.push_back({a, b});
  return out;
}

}  // namespace

AlgebraModel model_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("bad-model", std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("base_size") || !doc["base_size"].is_number_unsigned()) {
    throw Error("bad-model", "model needs a natural \"base_size\"");
  }
  const auto n = doc["base_size"].get<std::size_t>();
  if (doc.value("full", false)) return full_pra(n);

  if (!doc.contains("carrier") || !doc["carrier"].is_array()) {
    throw Error("bad-model", "non-full model needs a \"carrier\" array");
  }
  std::vector<FiniteRelation> carrier;
  for (const auto& r : doc["carrier"]) carrier.push_back(relation_from(r, n));
  FiniteRelation unit = doc.contains("unit") ? relation_from(doc["unit"], n) : FiniteRelation::full(n);
  FiniteRelation id = FiniteRelation::identity(n);
  if (doc.contains("identity") && !(doc["identity"].is_string() && doc["identity"] == "auto")) {
    id = relation_from(doc["identity"], n);
  }
  return AlgebraModel::make(n, std::move(carrier), std::move(unit), std::move(id));
}

AlgebraModel load_model(const std::string& source) {
  if (source.rfind("full:", 0) == 0) {
    const std::string digits = source.substr(5);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) {
      throw Error("bad-model", "expected full:<n>, got '" + source + "'");
    }
    return full_pra(std::stoul(digits));
  }
  std::ifstream in(source);
  if (!in) throw Error("bad-file", "cannot open model file '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return model_from_json_text(buf.str());
}

std::string model_to_json_text(const AlgebraModel& m) {
  json doc;
  doc["base_size"] = m.base_size();
  doc["full"] = m.is_full();
  if (!m.is_full()) {
    json carrier = json::array();
    for (const auto& r : m.carrier()) carrier.push_back(relation_to(r));
    doc["carrier"] = carrier;
    doc["unit"] = relation_to(m.unit());
    doc["identity"] = m.identity() == FiniteRelation::identity(m.base_size()) ? json("auto") : relation_to(m.identity());
  }
  return doc.dump(2);
}

}  // namespace relfork
