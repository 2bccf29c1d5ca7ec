#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "fvlim/solver.hpp"

namespace fvlim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat `key = value` text with optional [sections] and # comments. A
// `preset = name` line seeds the config; later keys override it. See the
// README for the grammar and the key list.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Applies one key to a config; shared by the file parser and CLI overrides.
void apply_config_key(RunConfig& config, const std::string& key, const std::string& value);

}  // namespace fvlim
