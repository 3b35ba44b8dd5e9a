#include "phavail/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace phavail {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) { known = true; break; }
    if (!known) throw UnknownField(key);
  }
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(std::string("missing field '") + key + "'");
  return *it;
}

double parse_rate(const json& obj, const char* field, bool strictly_positive) {
  auto it = obj.find(field);
  if (it == obj.end()) throw ConfigError(std::string("missing field '") + field + "'");
  if (!it->is_number()) throw InvalidRate(field, it->dump());
  const double v = it->get<double>();
  const bool ok = std::isfinite(v) && (strictly_positive ? v > 0.0 : v >= 0.0);
  if (!ok) throw InvalidRate(field, it->dump());
  return v;
}

ComponentParams parse_component(const json& obj, std::string& label) {
  if (!obj.is_object()) throw ConfigError("component entries must be objects");
  reject_unknown_keys(obj, {"label", "lambda", "mu", "law"});
  const json& jlabel = require(obj, "label");
  if (!jlabel.is_string()) throw ConfigError("'label' must be a string");
  label = jlabel.get<std::string>();

  ComponentParams p;
  p.lambda = parse_rate(obj, "lambda", true);
  p.mu = parse_rate(obj, "mu", false);

  const json& jlaw = require(obj, "law");
  const std::string law = jlaw.is_string() ? jlaw.get<std::string>() : jlaw.dump();
  if (law == "lindley") p.law = DistributionLaw::Lindley;
  else if (law == "exponential") p.law = DistributionLaw::Exponential;
  else throw UnknownLaw(law);
  return p;
}

AnalysisOptions parse_analysis(const json& obj) {
  reject_unknown_keys(obj, {"tStart", "tStop", "points", "logSpacing"});
  AnalysisOptions a;
  if (obj.contains("tStart")) a.t_start = obj["tStart"].get<double>();
  if (obj.contains("tStop")) a.t_stop = obj["tStop"].get<double>();
  if (obj.contains("points")) a.points = obj["points"].get<int>();
  if (obj.contains("logSpacing")) a.log_spacing = obj["logSpacing"].get<bool>();
  if (!(a.t_start >= 0.0) || !(a.t_stop > a.t_start))
    throw ConfigError("analysis grid requires 0 <= tStart < tStop");
  if (a.points < 2) throw ConfigError("analysis grid requires points >= 2");
  if (a.log_spacing && a.t_start <= 0.0)
    throw ConfigError("logSpacing requires tStart > 0");
  return a;
}

}  // namespace

ModelConfig parse_model_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Recover the line number from the byte offset.
    const std::size_t upto = std::min(text.size(), static_cast<std::size_t>(e.byte));
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw SyntaxError(line, e.what());
  }
  if (!doc.is_object()) throw ConfigError("top-level document must be an object");
  reject_unknown_keys(doc, {"name", "structure", "components", "analysis"});

  ModelConfig cfg;
  const json& jname = require(doc, "name");
  if (!jname.is_string()) throw ConfigError("'name' must be a string");
  cfg.model.name = jname.get<std::string>();

  const json& jstructure = require(doc, "structure");
  const std::string structure =
      jstructure.is_string() ? jstructure.get<std::string>() : jstructure.dump();
  if (structure == "single") cfg.model.structure = SystemStructure::Single;
  else if (structure == "series") cfg.model.structure = SystemStructure::Series;
  else if (structure == "parallel") cfg.model.structure = SystemStructure::Parallel;
  else throw ConfigError("unknown structure '" + structure +
                         "' (expected \"single\", \"series\" or \"parallel\")");

  const json& jcomponents = require(doc, "components");
  if (!jcomponents.is_array()) throw ConfigError("'components' must be an array");
  for (const json& jc : jcomponents) {
    SystemComponent c;
    c.params = parse_component(jc, c.label);
    cfg.model.components.push_back(std::move(c));
  }

  if (doc.contains("analysis")) cfg.analysis = parse_analysis(doc["analysis"]);

  cfg.model.check();
  return cfg;
}

ModelConfig load_model_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open model file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_config(buf.str());
}

}  // namespace phavail
