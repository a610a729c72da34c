#include "hankelflow/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hankelflow/errors.hpp"

namespace hankelflow::config {
namespace {

using nlohmann::json;

double number(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
  return v.get<double>();
}

double number_or(const json& obj, const char* key, double fallback) {
  return obj.contains(key) ? number(obj, key) : fallback;
}

std::size_t count(const json& obj, const char* key, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ConfigError(std::string("key '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> number_list(const json& v, const char* key) {
  if (!v.is_array()) throw ConfigError(std::string("key '") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& item : v) {
    if (!item.is_number()) throw ConfigError(std::string("key '") + key + "' holds a non-number");
    out.push_back(item.get<double>());
  }
  return out;
}

InitialData initial_data(const json& doc, const char* key, const std::filesystem::path& base) {
  InitialData data;
  if (!doc.contains(key)) return data;
  const auto& v = doc.at(key);
  if (!v.is_object()) throw ConfigError(std::string("key '") + key + "' must be an object");
  for (const auto& [k, _] : v.items()) {
    if (k != "coeffs" && k != "csv" && k != "degree") {
      throw ConfigError(std::string(key) + ": unknown key '" + k +
                        "' (only radial data in xi is supported)");
    }
  }
  if (v.contains("coeffs") && v.contains("csv")) {
    throw ConfigError(std::string(key) + ": give either 'coeffs' or 'csv', not both");
  }
  if (v.contains("coeffs")) data.coeffs = number_list(v.at("coeffs"), "coeffs");
  if (v.contains("csv")) {
    if (!v.at("csv").is_string()) throw ConfigError(std::string(key) + ".csv must be a string");
    std::filesystem::path p = v.at("csv").get<std::string>();
    data.csv = p.is_absolute() ? p : base / p;
  }
  if (v.contains("degree")) {
    const auto& d = v.at("degree");
    if (!d.is_number_integer() || d.get<int>() < 0) {
      throw ConfigError(std::string(key) + ".degree must be a nonnegative integer");
    }
    data.degree = d.get<int>();
  }
  return data;
}

nondim::PhysicalParams physical_params(const json& v) {
  if (!v.is_object()) throw ConfigError("'physical' must be an object");
  return {number(v, "nu"), number(v, "kappa"), number(v, "g"), number(v, "alpha"),
          number(v, "d"),  number(v, "H"),     number(v, "rho"), number(v, "c"),
          number(v, "T1"), number(v, "T2")};
}

double parse_double(std::string_view text, const std::filesystem::path& path, std::size_t line) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(path.string() + ":" + std::to_string(line) + ": cannot parse number '" +
                      std::string(text) + "'");
  }
  return value;
}

}  // namespace

SimulationConfig parse(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  SimulationConfig cfg;
  cfg.source = doc;

  if (!doc.contains("config_version")) throw ConfigError("missing key 'config_version'");
  if (!doc.at("config_version").is_number_integer() ||
      doc.at("config_version").get<int>() != kConfigVersion) {
    throw ConfigError("unsupported config_version (expected " + std::to_string(kConfigVersion) +
                      ")");
  }

  if (doc.contains("physical")) {
    cfg.physical = physical_params(doc.at("physical"));
    try {
      const auto dimless = nondim::derive(*cfg.physical);
      cfg.prandtl = dimless.prandtl;
      cfg.rayleigh = dimless.rayleigh;
      cfg.t_tilde = dimless.t_tilde;
    } catch (const std::exception& e) {
      throw ConfigError(std::string("physical: ") + e.what());
    }
    if (doc.contains("prandtl") || doc.contains("rayleigh") || doc.contains("t_tilde")) {
      throw ConfigError("give either 'physical' or prandtl/rayleigh/t_tilde, not both");
    }
  } else {
    cfg.prandtl = number(doc, "prandtl");
    cfg.rayleigh = number_or(doc, "rayleigh", 0.0);
    cfg.t_tilde = number_or(doc, "t_tilde", 0.0);
  }
  if (!(cfg.prandtl > 0.0) || !std::isfinite(cfg.prandtl)) {
    throw ConfigError("prandtl must be positive");
  }
  if (!std::isfinite(cfg.rayleigh) || !std::isfinite(cfg.t_tilde)) {
    throw ConfigError("rayleigh and t_tilde must be finite");
  }

  cfg.xi0 = number_or(doc, "xi0", 1.0);
  if (!(cfg.xi0 > 0.0) || !std::isfinite(cfg.xi0)) throw ConfigError("xi0 must be positive");
  cfg.modes = count(doc, "modes", hankel::kDefaultModes);

  if (doc.contains("grid")) {
    const auto& g = doc.at("grid");
    if (!g.is_object()) throw ConfigError("'grid' must be an object");
    cfg.grid.n_r = count(g, "n_r", cfg.grid.n_r);
    cfg.grid.n_z = count(g, "n_z", cfg.grid.n_z);
    cfg.grid.r_max = number_or(g, "r_max", cfg.grid.r_max);
    cfg.grid.z_max = number_or(g, "z_max", cfg.grid.z_max);
  }
  if (!(cfg.grid.r_max >= 0.0) || !(cfg.grid.z_max >= 0.0) || cfg.grid.r_max > cfg.xi0 ||
      cfg.grid.z_max > cfg.xi0) {
    throw ConfigError("grid: r_max and z_max must lie in [0, xi0]");
  }

  if (doc.contains("times")) cfg.times = number_list(doc.at("times"), "times");
  if (cfg.times.empty()) throw ConfigError("times must not be empty");
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    if (!(cfg.times[i] >= 0.0) || !std::isfinite(cfg.times[i])) {
      throw ConfigError("times must be finite and nonnegative");
    }
    if (i > 0 && !(cfg.times[i] > cfg.times[i - 1])) {
      throw ConfigError("times must be strictly ascending");
    }
  }

  cfg.initial_temperature = initial_data(doc, "initial_temperature", base_dir);
  cfg.initial_vorticity = initial_data(doc, "initial_vorticity", base_dir);

  if (doc.contains("tolerances")) {
    const auto& t = doc.at("tolerances");
    if (!t.is_object()) throw ConfigError("'tolerances' must be an object");
    cfg.quad_tol = number_or(t, "quad_tol", cfg.quad_tol);
    cfg.ode_tol = number_or(t, "ode_tol", cfg.ode_tol);
  }
  if (!(cfg.quad_tol > 0.0) || !(cfg.ode_tol > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }

  static const std::vector<std::string> known = {
      "config_version", "physical", "prandtl", "rayleigh", "t_tilde", "xi0", "modes", "grid",
      "times", "initial_temperature", "initial_vorticity", "tolerances"};
  for (const auto& [k, _] : doc.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      throw ConfigError("unknown key '" + k + "'");
    }
  }
  return cfg;
}

SimulationConfig load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse(doc, path.parent_path());
}

std::vector<std::vector<double>> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read CSV file " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::string_view view(line);
    while (true) {
      const auto comma = view.find(',');
      row.push_back(parse_double(view.substr(0, comma), path, lineno));
      if (comma == std::string_view::npos) break;
      view.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": ragged row");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<std::vector<double>, std::vector<double>> read_two_column_csv(
    const std::filesystem::path& path) {
  const auto rows = read_csv(path);
  if (rows.size() < 2) throw ConfigError(path.string() + ": need at least two data rows");
  if (rows.front().size() < 2) throw ConfigError(path.string() + ": expected two columns");
  std::vector<double> first;
  std::vector<double> second;
  for (const auto& row : rows) {
    first.push_back(row[0]);
    second.push_back(row[1]);
  }
  return {std::move(first), std::move(second)};
}

heat_series::RadialPolynomial initial_heat(const SimulationConfig& cfg) {
  const auto& data = cfg.initial_temperature;
  if (!data.from_csv()) {
    return heat_series::RadialPolynomial::from_temperature(data.coeffs, cfg.xi0);
  }
  auto [xi, values] = read_two_column_csv(data.csv);
  if (xi.front() != 0.0 || std::abs(xi.back() - cfg.xi0) > 1e-12 * cfg.xi0) {
    throw ConfigError(data.csv.string() + ": samples must span [0, xi0]");
  }
  xi.back() = cfg.xi0;
  // T0 is fitted and then multiplied by xi, so xi T0 has no constant term.
  const auto fit =
      heat_series::project_to_polynomial(hankel::RadialProfile::sampled(xi, values), data.degree);
  const auto c = fit.poly.poly().coeffs();
  return heat_series::RadialPolynomial::from_temperature({c.begin(), c.end()}, cfg.xi0);
}

hankel::RadialProfile initial_vorticity(const SimulationConfig& cfg) {
  const auto& data = cfg.initial_vorticity;
  if (!data.from_csv()) {
    Polynomial p(data.coeffs);
    return hankel::RadialProfile::analytic([p](double xi) { return p(xi); }, cfg.xi0);
  }
  auto [xi, values] = read_two_column_csv(data.csv);
  if (xi.front() != 0.0 || std::abs(xi.back() - cfg.xi0) > 1e-12 * cfg.xi0) {
    throw ConfigError(data.csv.string() + ": samples must span [0, xi0]");
  }
  xi.back() = cfg.xi0;
  return hankel::RadialProfile::sampled(std::move(xi), std::move(values));
}

spectral::SpectralModel build_model(const SimulationConfig& cfg) {
  return spectral::SpectralModel::from_profiles(bessel::find_roots(cfg.xi0, cfg.modes),
                                                initial_heat(cfg), initial_vorticity(cfg),
                                                cfg.prandtl, cfg.rayleigh, cfg.quad_tol);
}

}  // namespace hankelflow::config
