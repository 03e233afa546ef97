#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace faithcert::cli {

/// Parse or validation failure; the message carries "source:line:column".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Suite { env, rees, sklyanin, all };

Suite suite_from_string(std::string_view text);
std::string_view to_string(Suite suite);

struct LieConfig {
  struct Bracket {
    std::size_t i, j, k;
    std::string value;
  };
  std::optional<std::string> builtin;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Bracket> structure_constants;
  /// Coordinates of x' in g; empty means the first basis element.
  std::vector<std::string> x;
  std::string mu = "0";
};

struct CurveConfig {
  using Triple = std::array<std::string, 3>;
  std::string psi;
  Triple p, P, Q, S;
};

struct Caps {
  /// Degree cap; unset means 4 for env/rees and 3 for sklyanin.
  std::optional<std::uint32_t> d;
  /// Shifts for the lie-env certificate; unset means dim U_d.
  std::optional<std::uint32_t> N;
  std::uint32_t n_max = 6;
  std::uint32_t tensor_cap = 5;
  std::uint32_t sample_margin = 5;
  std::uint32_t torsion_bound = 12;

  std::uint32_t env_d() const { return d.value_or(4); }
  std::uint32_t sklyanin_d() const { return d.value_or(3); }
  std::uint32_t shifts(std::size_t lie_dim) const;
};

struct RunConfig {
  Suite suite = Suite::all;
  std::string backend = "rational";
  std::optional<LieConfig> lie;
  std::optional<CurveConfig> curve;
  Caps caps;
  std::string output;

  bool runs(Suite s) const { return suite == Suite::all || suite == s; }
};

RunConfig parse_config(std::string_view text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// Checks the fields the selected suites need; throws ConfigError.
void validate(const RunConfig& config);

}  // namespace faithcert::cli
