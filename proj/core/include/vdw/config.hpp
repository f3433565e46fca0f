#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "vdw/pressure.hpp"

namespace vdw {

/// Configuration error with a field-specific message; the CLI maps this to
/// exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  std::size_t layer = 0;  // 0-based after parsing (config uses 1-based)
  double min_nm = 0.0;
  double max_nm = 0.0;
  int points = 0;
  bool log_spacing = true;
};

struct RunConfig {
  double temperature = 300.0;
  std::map<std::string, MaterialModel> materials;
  Stack stack;
  std::optional<SweepSpec> sweep;
  MatsubaraSpec matsubara;   // temperature mirrored here
  QuadratureSpec quadrature;
};

/// Parse and validate a JSON config file. Throws ConfigError with a
/// field-specific message on any problem.
RunConfig parse_config(const std::string& path);

/// Parse from an already-loaded JSON string (used by tests).
RunConfig parse_config_text(const std::string& text);

}  // namespace vdw
