#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "envelope/dos.hpp"
#include "envelope/model.hpp"

namespace envelope::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;

/// A configured system together with its closed forms, when it has any.
struct ConfiguredSystem {
  std::string kind;
  SystemSpec spec;
  std::function<double(double q)> closed_energy;
  std::function<double(double lambda)> closed_phi;
  /// Added to every reported energy (confined ground-state shift).
  double energy_shift = 0.0;
};

/// Builds the system named by the `system` key. Unknown systems and
/// parameters outside their domain raise ConfigError.
ConfiguredSystem configure_system(const Config& cfg);

/// `phi` value: a positive number, `2`, or `dos`.
PhiChoice parse_phi(const Config& cfg, PhiChoice fallback);

/// nu and lambda from `nu`/`lambda`, the per-mode lists `n`/`l`, or the
/// sums `n_sum`/`l_sum` (default: the ground state).
std::pair<double, double> configured_nu_lambda(const Config& cfg, const SystemSpec& spec);

/// Twelve significant digits, `.` decimal separator.
std::string format_number(double x);

/// Entry point shared by the executable and the tests. `args` excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace envelope::cli
