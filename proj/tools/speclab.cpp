#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "speclab/errors.hpp"
#include "speclab/harness.hpp"

int main(int argc, char** argv) {
  using namespace speclab;
  CLI::App app{"Radial spectral experiments on warped products"};
  app.set_version_flag("--version", std::string(tool_version()));

  std::string experiment;
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  app.add_option("experiment", experiment,
                 "growth-audit | spectrum-fill | weyl-sweep | region-map | heat-audit")
      ->required();
  app.add_option("--config", config_path, "YAML configuration file")->required();
  auto* out_opt = app.add_option("--out", out_dir, "output directory (overrides the config)");
  auto* seed_opt = app.add_option("--seed", seed, "seed recorded in the report (overrides the config)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    const Experiment requested = parse_experiment(experiment);
    ExperimentConfig config = load_config(config_path);
    if (config.experiment != requested) {
      throw ConfigError("config describes '" + std::string(to_string(config.experiment)) +
                        "' but the command line asked for '" + experiment + "'");
    }
    if (*out_opt) config.output = out_dir;
    if (*seed_opt) config.seed = seed;

    RunOptions options;
    options.threads = threads;
    const ExperimentReport report = run_experiment(config, options);
    emit_report(report, config.output);

    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& v : report.verdicts) {
      std::cout << (v.passed ? "PASS  " : "FAIL  ") << v.name << "\n";
    }
    if (report.failure) {
      std::cerr << "error (" << report.failure->kind << "): " << report.failure->message << "\n";
    }
    std::cout << "report written to " << config.output << "\n";
    return exit_code_for(report);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
