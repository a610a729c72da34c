#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankelflow/flow_fields.hpp"
#include "hankelflow/nondim.hpp"
#include "hankelflow/spectral_vorticity.hpp"

namespace hankelflow::config {

inline constexpr int kConfigVersion = 1;

/// Either polynomial coefficients in powers of xi, or a two-column CSV
/// (`xi,value`) sampled on [0, xi0].
struct InitialData {
  std::vector<double> coeffs;
  std::filesystem::path csv;  // resolved against the config file directory
  int degree = 6;             // projection degree for CSV temperature data

  bool from_csv() const { return !csv.empty(); }
};

struct SimulationConfig {
  int config_version = kConfigVersion;
  std::optional<nondim::PhysicalParams> physical;
  double prandtl = 1.0;
  double rayleigh = 0.0;
  double t_tilde = 0.0;
  double xi0 = 1.0;
  std::size_t modes = hankel::kDefaultModes;
  flow::Grid grid{21, 21, 0.7, 0.7};
  std::vector<double> times{0.0};
  InitialData initial_temperature;  // T0(xi)
  InitialData initial_vorticity;    // Omega0(xi) = omega0 / r
  double quad_tol = hankel::kDefaultQuadTol;
  double ode_tol = spectral::kDefaultOdeTol;

  nlohmann::json source;  // the parsed input, echoed into run metadata
};

/// Parses and validates. Throws ConfigError with the offending key.
SimulationConfig parse(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});

/// Reads a JSON config file. Throws ConfigError if unreadable or invalid.
SimulationConfig load(const std::filesystem::path& path);

/// xi T0 as a polynomial; CSV data is projected at `degree`.
heat_series::RadialPolynomial initial_heat(const SimulationConfig& cfg);

/// Omega0 on [0, xi0]; CSV data is spline-interpolated.
hankel::RadialProfile initial_vorticity(const SimulationConfig& cfg);

spectral::SpectralModel build_model(const SimulationConfig& cfg);

/// Reads a numeric CSV after one header row; every row must have the same
/// number of columns. Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<double>> read_csv(const std::filesystem::path& path);

/// First two columns of read_csv().
std::pair<std::vector<double>, std::vector<double>> read_two_column_csv(
    const std::filesystem::path& path);

}  // namespace hankelflow::config
