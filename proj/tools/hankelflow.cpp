// Command-line driver: roots, solve, verify, transform.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "hankelflow/cli.hpp"

namespace cli = hankelflow::cli;

int main(int argc, char** argv) {
  CLI::App app{"Axisymmetric Boussinesq flow by finite Hankel transform and heat series"};
  app.require_subcommand(1);

  double xi0 = 1.0;
  long long count = 10;
  auto* roots = app.add_subcommand("roots", "List roots of J_{3/2}(mu xi0) = 0 as CSV");
  roots->add_option("--xi0", xi0, "Outer radius of the radial domain")->required();
  roots->add_option("--count", count, "Number of roots")->required();

  std::string config_path;
  std::string output_dir = "out";
  auto* solve = app.add_subcommand("solve", "Write field snapshots for every configured time");
  solve->add_option("config", config_path, "JSON configuration file")->required();
  solve->add_option("-o,--output", output_dir, "Output directory");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run oracle checks and residual diagnostics");
  verify->add_option("config", config_path, "JSON configuration file")->required();
  verify->add_option("--report", report_path, "Write the machine-readable report here");

  auto* transform = app.add_subcommand("transform", "Finite Hankel transform of a CSV profile");
  transform->require_subcommand(1);
  std::string input;
  long long modes = 50;
  long long points = 101;
  auto* fwd = transform->add_subcommand("forward", "xi,value profile -> n,mu,coefficient");
  fwd->add_option("input", input, "Profile CSV sampled on [0, xi0]")->required();
  fwd->add_option("--modes", modes, "Number of modes");
  auto* inv = transform->add_subcommand("inverse", "n,...,coefficient -> xi,value,last_term");
  inv->add_option("input", input, "Coefficient CSV")->required();
  inv->add_option("--xi0", xi0, "Outer radius")->required();
  inv->add_option("--points", points, "Number of output nodes on [0, xi0]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  try {
    if (*roots) return cli::cmd_roots(xi0, count, std::cout, std::cerr);
    if (*solve) return cli::cmd_solve(config_path, output_dir, std::cout, std::cerr);
    if (*verify) {
      std::optional<std::filesystem::path> report;
      if (!report_path.empty()) report = report_path;
      return cli::cmd_verify(config_path, report, std::cout, std::cerr);
    }
    if (*fwd) return cli::cmd_transform_forward(input, modes, std::cout, std::cerr);
    if (*inv) return cli::cmd_transform_inverse(input, xi0, points, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "hankelflow: " << e.what() << '\n';
    return cli::kExitFailure;
  }
  return cli::kExitUsage;
}
