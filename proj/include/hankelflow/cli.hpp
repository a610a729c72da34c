#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankelflow/config.hpp"
#include "hankelflow/verify.hpp"

/// Subcommand bodies behind the `hankelflow` executable. Each returns the
/// process exit code: 0 success, 1 computational or check failure, 2 usage
/// or configuration error.
namespace hankelflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

/// CSV `n,mu,mu_xi0,deriv,residual` for the first `count` roots.
int cmd_roots(double xi0, long long count, std::ostream& out, std::ostream& err);

/// Writes fields_t<t>.csv for every configured time and run_meta.json.
int cmd_solve(const std::filesystem::path& config_path, const std::filesystem::path& output_dir,
              std::ostream& log, std::ostream& err);

struct VerifyOutcome {
  std::vector<verify::ResidualReport> checks;
  bool all_passed = true;
};

/// Runs every check and diagnostic for a parsed config.
VerifyOutcome run_verification(const config::SimulationConfig& cfg);

/// Prints the verification table; optionally writes the JSON report.
int cmd_verify(const std::filesystem::path& config_path,
               const std::optional<std::filesystem::path>& report_path, std::ostream& out,
               std::ostream& err);

/// Forward transform of a `xi,value` CSV profile; prints `n,mu,coefficient`.
int cmd_transform_forward(const std::filesystem::path& input, long long modes, std::ostream& out,
                          std::ostream& err);

/// Inverse transform of a CSV whose first column is the mode index and last
/// column the coefficient, so forward output is accepted as is. Evaluated on
/// `points` uniform nodes of [0, xi0]; prints `xi,value,last_term`.
int cmd_transform_inverse(const std::filesystem::path& input, double xi0, long long points,
                          std::ostream& out, std::ostream& err);

nlohmann::json to_json(const verify::ResidualReport& report);

/// Roundtrip threshold for `modes` modes, calibrated on xi^{3/2}(xi0 - xi).
double roundtrip_threshold(std::size_t modes);

}  // namespace hankelflow::cli
