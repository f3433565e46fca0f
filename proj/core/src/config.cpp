#include "vdw/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vdw {

namespace {

using nlohmann::json;

double require_positive(const json& j, const std::string& field, double value) {
  (void)j;
  if (!(value > 0.0)) throw ConfigError(field + " must be > 0");
  return value;
}

MaterialModel parse_material(const std::string& name, const json& j) {
  const std::string where = "materials." + name;
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  const std::string kind = j.value("kind", "");
  const double mu = j.value("permeability", 1.0);
  if (!(mu > 0.0)) throw ConfigError(where + ".permeability must be > 0");
  try {
    if (kind == "vacuum") {
      return MaterialModel::vacuum();
    } else if (kind == "constant") {
      if (!j.contains("epsilon")) throw ConfigError(where + ".epsilon is required");
      return MaterialModel::constant(j.at("epsilon").get<double>(), mu);
    } else if (kind == "lorentz") {
      std::vector<OscillatorTerm> oscillators;
      for (const auto& o : j.value("oscillators", json::array())) {
        OscillatorTerm term;
        term.strength = o.value("strength", 0.0);
        term.resonance = o.value("resonance", 0.0);
        term.damping = o.value("damping", 0.0);
        oscillators.push_back(term);
      }
      return MaterialModel::lorentz(j.value("static_offset", 0.0), std::move(oscillators), mu);
    } else if (kind == "drude") {
      if (!j.contains("plasma_frequency"))
        throw ConfigError(where + ".plasma_frequency is required");
      return MaterialModel::drude(j.at("plasma_frequency").get<double>(),
                                  j.value("damping", 0.0), mu);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ".kind must be one of vacuum, constant, lorentz, drude");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  RunConfig config;
  config.temperature = j.value("temperature", 300.0);
  if (!(config.temperature > 0.0)) throw ConfigError("temperature must be > 0");

  if (!j.contains("materials") || !j.at("materials").is_object())
    throw ConfigError("materials table is required");
  for (const auto& [name, body] : j.at("materials").items())
    config.materials.emplace(name, parse_material(name, body));

  auto lookup = [&](const std::string& name, const std::string& field) -> const MaterialModel& {
    auto it = config.materials.find(name);
    if (it == config.materials.end())
      throw ConfigError(field + " references unknown material '" + name + "'");
    return it->second;
  };

  if (!j.contains("stack") || !j.at("stack").is_object())
    throw ConfigError("stack section is required");
  const json& stack = j.at("stack");
  if (!stack.contains("left")) throw ConfigError("stack.left is required");
  if (!stack.contains("right")) throw ConfigError("stack.right is required");
  config.stack.left = lookup(stack.at("left").get<std::string>(), "stack.left");
  config.stack.right = lookup(stack.at("right").get<std::string>(), "stack.right");
  if (!stack.contains("layers") || !stack.at("layers").is_array() || stack.at("layers").empty())
    throw ConfigError("stack.layers must be a non-empty array");
  int index = 0;
  for (const auto& layer : stack.at("layers")) {
    std::ostringstream field;
    field << "stack.layers[" << index << "]";
    if (!layer.contains("material")) throw ConfigError(field.str() + ".material is required");
    const MaterialModel& mat =
        lookup(layer.at("material").get<std::string>(), field.str() + ".material");
    const double thickness_nm = layer.value("thickness_nm", 0.0);
    require_positive(layer, field.str() + ".thickness_nm", thickness_nm);
    config.stack.layers.push_back({mat, thickness_nm * 1e-9});
    ++index;
  }

  if (j.contains("sweep")) {
    const json& sw = j.at("sweep");
    SweepSpec sweep;
    const int layer = sw.value("layer", 1);
    if (layer < 1 || static_cast<std::size_t>(layer) > config.stack.layers.size())
      throw ConfigError("sweep.layer must index a stack layer (1-based)");
    sweep.layer = static_cast<std::size_t>(layer - 1);
    sweep.min_nm = sw.value("min_nm", 0.0);
    sweep.max_nm = sw.value("max_nm", 0.0);
    require_positive(sw, "sweep.min_nm", sweep.min_nm);
    if (!(sweep.max_nm > sweep.min_nm)) throw ConfigError("sweep requires min_nm < max_nm");
    sweep.points = sw.value("points", 0);
    if (sweep.points < 2) throw ConfigError("sweep.points must be >= 2");
    const std::string spacing = sw.value("spacing", "log");
    if (spacing == "log")
      sweep.log_spacing = true;
    else if (spacing == "linear")
      sweep.log_spacing = false;
    else
      throw ConfigError("sweep.spacing must be 'log' or 'linear'");
    config.sweep = sweep;
  }

  config.matsubara.temperature = config.temperature;
  if (j.contains("numerics")) {
    const json& num = j.at("numerics");
    config.matsubara.rel_tol = num.value("matsubara_rel_tol", config.matsubara.rel_tol);
    config.matsubara.min_terms = num.value("matsubara_min_terms", config.matsubara.min_terms);
    config.matsubara.max_terms = num.value("matsubara_max_terms", config.matsubara.max_terms);
    config.quadrature.rel_tol = num.value("quad_rel_tol", config.quadrature.rel_tol);
    config.quadrature.abs_tol = num.value("quad_abs_tol", config.quadrature.abs_tol);
    config.quadrature.max_depth = num.value("quad_max_depth", config.quadrature.max_depth);
    config.quadrature.tail_cutoff = num.value("quad_tail_cutoff", config.quadrature.tail_cutoff);
    if (!(config.matsubara.rel_tol > 0.0 && config.matsubara.rel_tol < 1.0))
      throw ConfigError("numerics.matsubara_rel_tol must be in (0, 1)");
    if (config.matsubara.min_terms < 1) throw ConfigError("numerics.matsubara_min_terms must be >= 1");
    if (!(config.quadrature.rel_tol > 0.0)) throw ConfigError("numerics.quad_rel_tol must be > 0");
    if (config.quadrature.max_depth < 1) throw ConfigError("numerics.quad_max_depth must be >= 1");
  }
  return config;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace vdw
