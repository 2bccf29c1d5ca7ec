#include "fvlim/config.hpp"

#include <fstream>
#include <sstream>

#include "fvlim/experiments.hpp"

namespace fvlim {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_number(const std::string& value, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ConfigError("config: bad numeric value '" + value + "' for key '" + key + "'");
  }
}

std::pair<double, double> to_interval(const std::string& value, const std::string& key) {
  std::istringstream ss(value);
  double a = 0.0, b = 0.0;
  ss >> a >> b;
  if (!ss || !(ss >> std::ws).eof())
    throw ConfigError("config: key '" + key + "' expects two numbers, got '" + value + "'");
  return {a, b};
}

bool to_bool(const std::string& value, const std::string& key) {
  if (value == "1" || value == "true" || value == "on") return true;
  if (value == "0" || value == "false" || value == "off") return false;
  throw ConfigError("config: bad boolean '" + value + "' for key '" + key + "'");
}

}  // namespace

void apply_config_key(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "preset") {
    const double shift = config.ic_shift;
    config = preset(value);
    if (shift != 0.0) apply_config_key(config, "ic_shift", std::to_string(shift));
  } else if (key == "model") {
    if (value == "advection") config.model = AdvectionModel{1.0};
    else if (value == "euler") config.model = EulerModel{1.4};
    else throw ConfigError("config: model must be 'advection' or 'euler'");
  } else if (key == "a") {
    if (auto* m = std::get_if<AdvectionModel>(&config.model)) m->speed = to_number(value, key);
    else throw ConfigError("config: 'a' applies to the advection model only");
  } else if (key == "gamma") {
    if (auto* m = std::get_if<EulerModel>(&config.model)) m->gamma = to_number(value, key);
    else throw ConfigError("config: 'gamma' applies to the Euler model only");
  } else if (key == "domain") {
    const auto [l, r] = to_interval(value, key);
    if (!(r > l)) throw ConfigError("config: empty domain");
    config.x_left = l;
    config.x_right = r;
  } else if (key == "n") {
    config.n_cells = static_cast<int>(to_number(value, key));
    if (config.n_cells <= 0) throw ConfigError("config: n must be positive");
  } else if (key == "cfl") {
    config.cfl = to_number(value, key);
    if (!(config.cfl > 0.0 && config.cfl <= 1.0))
      throw ConfigError("config: cfl must be in (0, 1]");
  } else if (key == "t_end") {
    config.t_end = to_number(value, key);
    if (!(config.t_end >= 0.0)) throw ConfigError("config: t_end must be >= 0");
  } else if (key == "bc") {
    if (value == "periodic") config.bc = BoundaryCondition::Kind::Periodic;
    else if (value == "transmissive") config.bc = BoundaryCondition::Kind::Transmissive;
    else if (value == "fixed") config.bc = BoundaryCondition::Kind::Fixed;
    else throw ConfigError("config: bc must be periodic, transmissive, or fixed");
  } else if (key == "ic") {
    try {
      config.ic = ic::by_name(value, config.ic_shift);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
    config.x_left = config.ic.x_left;
    config.x_right = config.ic.x_right;
    if (config.ic.components == 3 && !std::holds_alternative<EulerModel>(config.model))
      config.model = EulerModel{1.4};
  } else if (key == "ic_shift") {
    config.ic_shift = to_number(value, key);
    if (config.ic.name.rfind("square-wave", 0) == 0)
      config.ic = ic::square_wave(config.ic_shift);
    else if (config.ic_shift != 0.0)
      throw ConfigError("config: ic_shift is supported for the square wave only");
  } else if (key == "scheme") {
    try {
      config.scheme = LimiterScheme::parse(value);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  } else if (key == "alpha") {
    config.alpha = to_number(value, key);
    if (!(config.alpha >= 0.0)) throw ConfigError("config: alpha must be >= 0");
    if (config.scheme.needs_alpha()) config.scheme.alpha = config.alpha;
  } else if (key == "eps") {
    const double v = to_number(value, key);
    if (!(v > 0.0)) throw ConfigError("config: eps must be > 0");
    if (config.scheme.kind == LimiterKind::WenoYC) config.yc_coefficient = v;
    config.scheme.eps.value = v;
  } else if (key == "eps_policy") {
    if (value == "js") config.scheme.eps.kind = EpsilonPolicy::Kind::Fixed;
    else if (value == "yc") config.scheme.eps.kind = EpsilonPolicy::Kind::ScaleDx2;
    else if (value == "pow") config.scheme.eps.kind = EpsilonPolicy::Kind::PowerLaw;
    else throw ConfigError("config: eps_policy must be js, yc, or pow");
  } else if (key == "eps_q") {
    config.scheme.eps.exponent = to_number(value, key);
  } else if (key == "error_range") {
    config.error_range = to_interval(value, key);
  } else if (key == "flux") {
    if (value == "rusanov") config.flux = FluxKind::Rusanov;
    else if (value == "hll") config.flux = FluxKind::Hll;
    else throw ConfigError("config: flux must be rusanov or hll");
  } else if (key == "blend") {
    config.scheme.blend = to_bool(value, key);
  } else if (key == "frozen_dt") {
    config.frozen_dt = to_bool(value, key);
  } else if (key == "record_tv") {
    config.record_tv = to_bool(value, key);
  } else if (key == "name") {
    config.name = value;
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) + ": unterminated section");
      continue;  // sections are organizational only
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
    try {
      apply_config_key(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
    }
  }
  return config;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace fvlim
