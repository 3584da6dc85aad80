#include "eorlicz/specfile.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace eorlicz {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) throw SpecError("unknown key \"" + key + "\" in " + where);
  }
}

double number_field(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw SpecError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

MeasureSpace measure_from_json(const json& omega) {
  if (!omega.is_object()) throw SpecError("\"omega\" must be an object");
  std::string type = omega.value("type", std::string());
  if (type == "discrete") {
    reject_unknown_keys(omega, {"type", "atoms"}, "omega");
    if (!omega.contains("atoms") || !omega["atoms"].is_array() || omega["atoms"].empty()) {
      throw SpecError("discrete omega needs a nonempty \"atoms\" array");
    }
    std::vector<std::pair<double, double>> atoms;
    for (const json& atom : omega["atoms"]) {
      if (!atom.is_array() || atom.size() != 2 || !atom[0].is_number() || !atom[1].is_number()) {
        throw SpecError("each atom must be a [t, w] number pair");
      }
      atoms.emplace_back(atom[0].get<double>(), atom[1].get<double>());
    }
    try {
      return MeasureSpace::discrete(std::move(atoms));
    } catch (const std::invalid_argument& err) {
      throw SpecError(std::string("invalid omega: ") + err.what());
    }
  }
  if (type == "interval") {
    reject_unknown_keys(omega, {"type", "a", "b", "nodes", "rule"}, "omega");
    std::string rule_name = omega.value("rule", std::string("midpoint"));
    QuadratureRule rule;
    if (rule_name == "midpoint") rule = QuadratureRule::kMidpoint;
    else if (rule_name == "trapezoid") rule = QuadratureRule::kTrapezoid;
    else throw SpecError("\"rule\" must be \"midpoint\" or \"trapezoid\"");
    if (!omega.contains("nodes") || !omega["nodes"].is_number_integer()) {
      throw SpecError("interval omega needs an integer \"nodes\"");
    }
    try {
      return MeasureSpace::interval(number_field(omega, "a"), number_field(omega, "b"),
                                    omega["nodes"].get<int>(), rule);
    } catch (const std::invalid_argument& err) {
      throw SpecError(std::string("invalid omega: ") + err.what());
    }
  }
  throw SpecError("omega \"type\" must be \"discrete\" or \"interval\"");
}

void apply_config_overrides(const json& cfg_json, CheckConfig& cfg) {
  reject_unknown_keys(cfg_json,
                      {"u_grid", "ladder_ratio", "tol_convex", "tol_zero_limit", "big_M",
                       "max_ladder"},
                      "config");
  if (cfg_json.contains("u_grid")) {
    if (!cfg_json["u_grid"].is_array()) throw SpecError("\"u_grid\" must be an array");
    cfg.u_grid.clear();
    for (const json& v : cfg_json["u_grid"]) {
      if (!v.is_number()) throw SpecError("\"u_grid\" entries must be numbers");
      cfg.u_grid.push_back(v.get<double>());
    }
  }
  if (cfg_json.contains("ladder_ratio")) cfg.ladder_ratio = number_field(cfg_json, "ladder_ratio");
  if (cfg_json.contains("tol_convex")) cfg.tol_convex = number_field(cfg_json, "tol_convex");
  if (cfg_json.contains("tol_zero_limit")) {
    cfg.tol_zero_limit = number_field(cfg_json, "tol_zero_limit");
  }
  if (cfg_json.contains("big_M")) cfg.big_m = number_field(cfg_json, "big_M");
  if (cfg_json.contains("max_ladder")) {
    if (!cfg_json["max_ladder"].is_number_integer()) {
      throw SpecError("\"max_ladder\" must be an integer");
    }
    cfg.max_ladder = cfg_json["max_ladder"].get<int>();
  }
}

ExprPtr parse_dsl(const std::string& src, const char* what) {
  try {
    return parse(src);
  } catch (const ParseError& err) {
    throw SpecError(std::string("cannot parse ") + what + " \"" + src + "\": " + err.what());
  }
}

}  // namespace

SpecFile parse_spec_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    throw SpecError(std::string("invalid JSON: ") + err.what());
  }
  if (!root.is_object()) throw SpecError("spec must be a JSON object");
  reject_unknown_keys(root, {"phi", "E", "p", "omega", "t_samples", "classes", "config"},
                      "spec");

  SpecFile spec;
  if (!root.contains("phi") || !root["phi"].is_string()) {
    throw SpecError("spec needs a string \"phi\"");
  }
  if (!root.contains("E") || !root["E"].is_array() || root["E"].size() != 2 ||
      !root["E"][0].is_string() || !root["E"][1].is_string()) {
    throw SpecError("spec needs \"E\": [e_t, e_u] with two strings");
  }
  spec.phi_src = root["phi"].get<std::string>();
  spec.e_t_src = root["E"][0].get<std::string>();
  spec.e_u_src = root["E"][1].get<std::string>();
  spec.phi = parse_dsl(spec.phi_src, "phi");
  spec.e_t = parse_dsl(spec.e_t_src, "E[0]");
  spec.e_u = parse_dsl(spec.e_u_src, "E[1]");
  if (root.contains("p")) {
    if (!root["p"].is_number()) throw SpecError("\"p\" must be a number");
    spec.p = root["p"].get<double>();
  }
  spec.config = CheckConfig::defaults();
  if (root.contains("config")) apply_config_overrides(root["config"], spec.config);
  if (root.contains("t_samples")) {
    if (!root["t_samples"].is_array() || root["t_samples"].empty()) {
      throw SpecError("\"t_samples\" must be a nonempty array");
    }
    spec.config.t_samples.clear();
    for (const json& v : root["t_samples"]) {
      if (!v.is_number()) throw SpecError("\"t_samples\" entries must be numbers");
      spec.config.t_samples.push_back(v.get<double>());
    }
    spec.has_t_samples = true;
  }
  if (root.contains("omega")) spec.omega = measure_from_json(root["omega"]);
  if (root.contains("classes")) {
    if (!root["classes"].is_array() || root["classes"].empty()) {
      throw SpecError("\"classes\" must be a nonempty array");
    }
    for (const json& v : root["classes"]) {
      if (!v.is_string()) throw SpecError("\"classes\" entries must be strings");
      auto cls = eclass_from_string(v.get<std::string>());
      if (!cls) {
        throw SpecError("unknown class \"" + v.get<std::string>() +
                        "\" (use E-N, E-strong-Young, E-Orlicz, E-Young)");
      }
      spec.requested_classes.push_back(*cls);
    }
  } else {
    spec.requested_classes.assign(kClassChain.begin(), kClassChain.end());
  }
  try {
    spec.config.validate();
  } catch (const std::invalid_argument& err) {
    throw SpecError(std::string("invalid config: ") + err.what());
  }
  return spec;
}

SpecFile load_spec_file(const std::string& path) { return parse_spec_json(read_file(path)); }

GridFunction parse_grid_csv(const std::string& text, const MeasureSpace& m) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw SpecError("line " + std::to_string(line_no) + ": expected \"t,value\"");
    }
    std::string second = line.substr(comma + 1);
    double t = 0.0, v = 0.0;
    const char* tb = line.data() + start;
    auto [tp, terr] = std::from_chars(tb, line.data() + comma, t);
    std::size_t vstart = second.find_first_not_of(" \t");
    bool second_ok = false;
    if (vstart != std::string::npos) {
      auto [vp, verr] = std::from_chars(second.data() + vstart, second.data() + second.size(), v);
      second_ok = verr == std::errc() && vp == second.data() + second.size();
    }
    bool first_ok = terr == std::errc() && tp == line.data() + comma;
    if (!first_ok || !second_ok) {
      if (first_content_line && !first_ok) {
        first_content_line = false;  // header row
        continue;
      }
      throw SpecError("line " + std::to_string(line_no) + ": expected numeric \"t,value\"");
    }
    first_content_line = false;
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw SpecError("line " + std::to_string(line_no) +
                      ": value must be finite and nonnegative");
    }
    values.push_back(v);
  }
  if (values.size() != m.size()) {
    throw SpecError("CSV has " + std::to_string(values.size()) + " rows but omega has " +
                    std::to_string(m.size()) + " nodes");
  }
  return GridFunction(std::move(values));
}

GridFunction load_grid_csv(const std::string& path, const MeasureSpace& m) {
  return parse_grid_csv(read_file(path), m);
}

}  // namespace eorlicz
