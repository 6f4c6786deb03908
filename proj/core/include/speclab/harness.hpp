#pragma once

// Experiment configuration, orchestration and report emission.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "speclab/geometry.hpp"

namespace speclab {

enum class Experiment { GrowthAudit, SpectrumFill, WeylSweep, RegionMap, HeatAudit };

std::string to_string(Experiment e);
/// Throws ConfigError for unknown names.
Experiment parse_experiment(const std::string& name);

struct ProfileConfig {
  ProfileFamily family = ProfileFamily::Polynomial;
  double parameter = 0.0;  ///< k, beta or alpha
  int n = 2;
  double dt = 0.0;               ///< tabulated only
  std::vector<double> samples;   ///< tabulated only

  WarpingProfile build() const;
};

struct GridConfig {
  double h = 0.0;
  double T_max = 0.0;
};

struct GrowthParams {
  std::vector<double> epsilon{0.05, 0.1, 0.5};
  std::vector<double> r_grid{1, 2, 4, 8, 16, 32, 64};
  std::vector<double> centers{0, 5, 10, 20, 40, 80};
  std::vector<double> t_list{1, 2, 4, 8, 16, 32, 64};
  std::optional<double> K0;
  std::vector<RadiusPair> radius_pairs{{1, 2}, {1, 4}, {2, 8}, {4, 16}};
  double sturm_beta = 0.1;
  double sturm_T0 = 50.0;
  int sturm_doublings = 5;
  double volume_step = 0.05;
};

struct SpectrumParams {
  std::vector<double> T_list;  ///< defaults to grid.T_max
  double lambda_max = 1.0;
  int oracle_count = 20;
};

struct WeylParams {
  std::vector<double> lambda{0, 1, 5};
  std::vector<double> T{10, 20, 40, 80};
  std::vector<double> p{1};
  std::vector<double> generalized_lambda;
  int i_min = 1;
  int i_max = 0;
  double x_factor = 3.0;
  double y_factor = 2.0;
  std::vector<double> harmonic_R;
  std::vector<double> wang_R;
  std::vector<double> wang_lambda;
};

struct RegionParams {
  double p = 1.0;
  std::vector<double> z_re{1.0};
  std::vector<double> z_im{0.0};
  std::vector<double> T{10, 20, 40, 80};
  double slope_threshold = -0.5;
  int sign = 1;
};

struct HeatParams {
  std::vector<double> tau{0.1, 1, 10};
  std::vector<double> fit_tau{0.25, 1, 4};
  double delta = 0.5;
  std::vector<double> beta{1, 2};
  double xi_re = -1.0;
  double xi_im = 0.0;
  int m = 0;  ///< resolvent power; 0 means n + 3
  double laplace_alpha = -1.0;
  int laplace_m = 6;
  double laplace_tau_max = 200.0;
  int sample_rows = 24;
  double column_step = 0.1;
  double noise_floor = 1e-10;
};

using ExperimentParams = std::variant<GrowthParams, SpectrumParams, WeylParams, RegionParams, HeatParams>;

struct ExperimentConfig {
  Experiment experiment = Experiment::GrowthAudit;
  ProfileConfig profile;
  GridConfig grid;
  ExperimentParams params;
  std::string output = "out";
  std::uint64_t seed = 0;
};

/// Parses and validates; every problem found is reported in one ConfigError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

using Cell = std::variant<double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Verdict {
  std::string name;
  std::string inequality;  ///< the audited statement
  std::string anchor;      ///< short label of the result being audited
  bool passed = false;
  std::vector<std::pair<std::string, double>> values;  ///< raw numbers behind the verdict
};

struct Failure {
  std::string kind;  ///< "numeric", "accuracy", "precondition", "domain"
  std::string message;
};

struct RunInfo {
  double wall_time_s = 0.0;
  std::string timestamp;
};

struct ExperimentReport {
  int schema_version = 1;
  std::string tool_version;
  std::string experiment;
  std::string config_echo;  ///< normalised configuration as compact JSON
  std::vector<Verdict> verdicts;
  std::vector<Table> tables;
  std::vector<std::string> warnings;
  std::optional<Failure> failure;
  RunInfo run_info;

  bool all_passed() const;
  const Table* table(const std::string& name) const;
};

bool operator==(const ExperimentReport& a, const ExperimentReport& b);

struct RunOptions {
  std::size_t threads = 1;
};

/// Runs the experiment. Numerical failures inside an operation are caught and recorded in
/// `failure`; the tables and verdicts computed before the failure are kept.
ExperimentReport run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// JSON with doubles at full precision and non-finite values as "inf", "-inf", "nan".
std::string report_to_json(const ExperimentReport& report, bool include_run_info = true);
ExperimentReport report_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& config);

/// CSV text for one table: header line, then one line per row, 17 significant digits.
std::string table_to_csv(const Table& table);
std::string format_number(double value);

/// Writes text to path through a temporary file in the same directory and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

/// Writes report.json and one <table>.csv per table into dir.
void emit_report(const ExperimentReport& report, const std::filesystem::path& dir);

/// 0 pass, 1 verdict failed, 3 numerical failure.
int exit_code_for(const ExperimentReport& report);

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitIo = 4;

const char* tool_version();

}  // namespace speclab
