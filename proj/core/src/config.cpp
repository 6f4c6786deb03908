#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "speclab/errors.hpp"
#include "speclab/grid.hpp"
#include "speclab/harness.hpp"
#include "speclab/operators.hpp"

namespace speclab {

namespace {

using ordered_json = nlohmann::ordered_json;

class Problems {
 public:
  void add(std::string message) { messages_.push_back(std::move(message)); }
  bool empty() const { return messages_.empty(); }
  [[noreturn]] void raise() const {
    std::ostringstream out;
    out << "invalid configuration (" << messages_.size() << (messages_.size() == 1 ? " problem" : " problems")
        << "):";
    for (const auto& m : messages_) out << "\n  - " << m;
    throw ConfigError(out.str());
  }

 private:
  std::vector<std::string> messages_;
};

/// Typed reads from one YAML mapping; records unknown and malformed keys.
class Block {
 public:
  Block(const YAML::Node& node, std::string path, Problems& problems)
      : node_(node), path_(std::move(path)), problems_(problems) {
    if (node_ && !node_.IsMap()) problems_.add(path_ + ": expected a mapping");
  }

  bool has(const std::string& key) const { return node_ && node_.IsMap() && node_[key]; }

  template <class T>
  void read(const std::string& key, T& out, bool required = false) {
    seen_.insert(key);
    if (!has(key)) {
      if (required) problems_.add("missing key '" + qualified(key) + "'");
      return;
    }
    try {
      out = node_[key].template as<T>();
    } catch (const YAML::Exception&) {
      problems_.add("key '" + qualified(key) + "' has the wrong type");
    }
  }

  void read_list(const std::string& key, std::vector<double>& out, bool required = false) {
    seen_.insert(key);
    if (!has(key)) {
      if (required) problems_.add("missing key '" + qualified(key) + "'");
      return;
    }
    const YAML::Node v = node_[key];
    try {
      if (v.IsSequence()) {
        out = v.as<std::vector<double>>();
      } else {
        out = {v.as<double>()};
      }
    } catch (const YAML::Exception&) {
      problems_.add("key '" + qualified(key) + "' must be a number or a list of numbers");
    }
  }

  void read_pairs(const std::string& key, std::vector<RadiusPair>& out) {
    seen_.insert(key);
    if (!has(key)) return;
    try {
      std::vector<RadiusPair> pairs;
      for (const auto& item : node_[key]) {
        const auto v = item.as<std::vector<double>>();
        if (v.size() != 2) throw YAML::Exception(YAML::Mark::null_mark(), "pair");
        pairs.push_back({v[0], v[1]});
      }
      out = std::move(pairs);
    } catch (const YAML::Exception&) {
      problems_.add("key '" + qualified(key) + "' must be a list of [r, R] pairs");
    }
  }

  void mark(const std::string& key) { seen_.insert(key); }

  void reject_unknown() {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& item : node_) {
      const auto key = item.first.as<std::string>();
      if (!seen_.count(key)) problems_.add("unknown key '" + qualified(key) + "'");
    }
  }

 private:
  std::string qualified(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  YAML::Node node_;
  std::string path_;
  Problems& problems_;
  std::set<std::string> seen_;
};

ProfileFamily parse_family(const std::string& name, Problems& problems) {
  if (name == "polynomial") return ProfileFamily::Polynomial;
  if (name == "quasi-polynomial") return ProfileFamily::QuasiPolynomial;
  if (name == "exponential") return ProfileFamily::Exponential;
  if (name == "tabulated") return ProfileFamily::Tabulated;
  problems.add("profile.family '" + name + "' is not one of polynomial, quasi-polynomial, exponential, tabulated");
  return ProfileFamily::Polynomial;
}

const char* parameter_key(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::Polynomial: return "k";
    case ProfileFamily::QuasiPolynomial: return "beta";
    case ProfileFamily::Exponential: return "alpha";
    case ProfileFamily::Tabulated: return "";
  }
  return "";
}

bool all_positive(const std::vector<double>& v) {
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) return false;
  }
  return true;
}

bool all_nonnegative(const std::vector<double>& v) {
  for (double x : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) return false;
  }
  return true;
}

double max_of(const std::vector<double>& v) {
  double m = -INFINITY;
  for (double x : v) m = std::max(m, x);
  return m;
}

void parse_params(Experiment experiment, Block& b, ExperimentParams& params) {
  switch (experiment) {
    case Experiment::GrowthAudit: {
      GrowthParams p;
      b.read_list("epsilon", p.epsilon);
      b.read_list("r_grid", p.r_grid);
      b.read_list("centers", p.centers);
      b.read_list("t_list", p.t_list);
      double K0 = 0.0;
      b.mark("K0");
      if (b.has("K0")) {
        b.read("K0", K0);
        p.K0 = K0;
      }
      b.read_pairs("radius_pairs", p.radius_pairs);
      b.read("sturm_beta", p.sturm_beta);
      b.read("sturm_T0", p.sturm_T0);
      b.read("sturm_doublings", p.sturm_doublings);
      b.read("volume_step", p.volume_step);
      params = p;
      break;
    }
    case Experiment::SpectrumFill: {
      SpectrumParams p;
      b.read_list("T_list", p.T_list);
      b.read("lambda_max", p.lambda_max);
      b.read("oracle_count", p.oracle_count);
      params = p;
      break;
    }
    case Experiment::WeylSweep: {
      WeylParams p;
      b.read_list("lambda", p.lambda);
      b.read_list("T", p.T);
      b.read_list("p", p.p);
      b.read_list("generalized_lambda", p.generalized_lambda);
      b.read("i_min", p.i_min);
      b.read("i_max", p.i_max);
      b.read("x_factor", p.x_factor);
      b.read("y_factor", p.y_factor);
      b.read_list("harmonic_R", p.harmonic_R);
      b.read_list("wang_R", p.wang_R);
      b.read_list("wang_lambda", p.wang_lambda);
      params = p;
      break;
    }
    case Experiment::RegionMap: {
      RegionParams p;
      b.read("p", p.p);
      b.read_list("z_re", p.z_re);
      b.read_list("z_im", p.z_im);
      b.read_list("T", p.T);
      b.read("slope_threshold", p.slope_threshold);
      b.read("sign", p.sign);
      params = p;
      break;
    }
    case Experiment::HeatAudit: {
      HeatParams p;
      b.read_list("tau", p.tau);
      b.read_list("fit_tau", p.fit_tau);
      b.read("delta", p.delta);
      b.read_list("beta", p.beta);
      b.read("xi_re", p.xi_re);
      b.read("xi_im", p.xi_im);
      b.read("m", p.m);
      b.read("laplace_alpha", p.laplace_alpha);
      b.read("laplace_m", p.laplace_m);
      b.read("laplace_tau_max", p.laplace_tau_max);
      b.read("sample_rows", p.sample_rows);
      b.read("column_step", p.column_step);
      b.read("noise_floor", p.noise_floor);
      params = p;
      break;
    }
  }
}

void validate(ExperimentConfig& config, Problems& problems) {
  std::optional<WarpingProfile> profile;
  try {
    profile = config.profile.build();
  } catch (const Error& e) {
    problems.add(std::string("profile: ") + e.what());
  }
  const GridConfig& g = config.grid;
  std::optional<RadialGrid> grid;
  if (g.h > 0.0 && g.T_max > 0.0) {
    if (g.T_max / g.h < 4.0) {
      problems.add("grid: T_max / h must be at least 4");
    } else {
      grid = RadialGrid::covering(g.T_max, g.h);
    }
  } else {
    problems.add("grid: h and T_max must be positive");
  }
  const bool assembles = config.experiment != Experiment::GrowthAudit;
  if (profile && grid && assembles) {
    if (grid->t_max() > profile->domain_end()) problems.add("grid: T_max exceeds the tabulated profile range");
    else {
      try {
        check_resolution(*profile, *grid);
      } catch (const AccuracyError& e) {
        problems.add(std::string("grid: ") + e.what());
      }
    }
  }
  const double T_max = grid ? grid->t_max() : g.T_max;

  std::visit(
      [&](auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, GrowthParams>) {
          if (p.epsilon.empty() || !all_positive(p.epsilon)) problems.add("params.epsilon must be positive");
          if (p.r_grid.empty() || !all_positive(p.r_grid)) problems.add("params.r_grid must be positive");
          if (p.centers.empty() || !all_nonnegative(p.centers)) problems.add("params.centers must be >= 0");
          if (p.t_list.empty() || !all_positive(p.t_list)) problems.add("params.t_list must be positive");
          if (p.K0 && !(*p.K0 >= 0.0)) problems.add("params.K0 must be >= 0");
          for (const auto& pair : p.radius_pairs) {
            if (!(pair.r > 0.0 && pair.R >= pair.r)) problems.add("params.radius_pairs need 0 < r <= R");
          }
          if (!(p.sturm_beta > 0.0)) problems.add("params.sturm_beta must be positive");
          if (!(p.sturm_T0 > 0.0)) problems.add("params.sturm_T0 must be positive");
          if (p.sturm_doublings < 1) problems.add("params.sturm_doublings must be >= 1");
          if (!(p.volume_step > 0.0)) problems.add("params.volume_step must be positive");
        } else if constexpr (std::is_same_v<P, SpectrumParams>) {
          if (p.T_list.empty()) p.T_list = {g.T_max};
          if (!all_positive(p.T_list)) problems.add("params.T_list must be positive");
          if (!(p.lambda_max > 0.0)) problems.add("params.lambda_max must be positive");
          if (g.h * std::sqrt(std::max(p.lambda_max, 0.0)) > 0.05) {
            problems.add("grid.h too coarse for lambda_max: h sqrt(lambda_max) must be <= 0.05");
          }
          if (p.oracle_count < 1) problems.add("params.oracle_count must be >= 1");
          if (profile && g.h > 0.0) {
            for (double T : p.T_list) {
              if (T > profile->domain_end()) problems.add("params.T_list exceeds the tabulated profile range");
            }
          }
        } else if constexpr (std::is_same_v<P, WeylParams>) {
          if (p.lambda.empty()) problems.add("params.lambda must not be empty");
          if (p.T.empty() || !all_positive(p.T)) problems.add("params.T must be positive");
          if (!p.T.empty() && !(4.0 * max_of(p.T) < T_max)) {
            problems.add("params.T: support [T, 4T] must lie inside the grid (4 max T < T_max)");
          }
          for (double v : p.p) {
            if (!(v >= 1.0)) problems.add("params.p must be >= 1");
          }
          if (!all_nonnegative(p.generalized_lambda)) problems.add("params.generalized_lambda must be >= 0");
          if (!p.generalized_lambda.empty()) {
            if (p.i_max < p.i_min || p.i_min < 0) problems.add("params.i_min/i_max must satisfy 0 <= i_min <= i_max");
            if (!(p.x_factor > 2.0)) problems.add("params.x_factor must exceed 2 (x > 2R)");
            if (!(p.y_factor * p.x_factor > p.x_factor + 2.0)) problems.add("params.y_factor must give y > x + 2R");
            const double R = std::ldexp(1.0, p.i_max);
            if (!(p.y_factor * p.x_factor * R + R < T_max)) {
              problems.add("params.i_max: chi support y + R must lie inside the grid");
            }
          }
          for (double R : p.harmonic_R) {
            if (!(R >= 0.0 && R < T_max)) problems.add("params.harmonic_R must lie in [0, T_max)");
          }
          if (!p.wang_R.empty()) {
            if (p.wang_R.size() < 2 || !all_positive(p.wang_R)) problems.add("params.wang_R needs two or more radii");
            if (!(7.0 * max_of(p.wang_R) < T_max)) problems.add("params.wang_R: support 7R must lie inside the grid");
            if (p.wang_lambda.empty()) p.wang_lambda = {1.0};
            if (!all_nonnegative(p.wang_lambda)) problems.add("params.wang_lambda must be >= 0");
          }
        } else if constexpr (std::is_same_v<P, RegionParams>) {
          if (!(p.p >= 1.0)) problems.add("params.p must be >= 1");
          if (p.z_re.empty() || p.z_im.empty()) problems.add("params.z_re and params.z_im must not be empty");
          if (p.T.size() < 4) problems.add("params.T: region map is inconclusive with fewer than 4 values");
          for (std::size_t i = 1; i < p.T.size(); ++i) {
            if (!(p.T[i] > p.T[i - 1])) problems.add("params.T must be increasing");
          }
          if (!p.T.empty() && (!all_positive(p.T) || !(4.0 * max_of(p.T) < T_max))) {
            problems.add("params.T: support [T, 4T] must lie inside the grid (4 max T < T_max)");
          }
          if (p.sign != 1 && p.sign != -1) problems.add("params.sign must be +1 or -1");
        } else if constexpr (std::is_same_v<P, HeatParams>) {
          if (!all_nonnegative(p.tau)) problems.add("params.tau must be >= 0");
          if (p.fit_tau.empty() || !all_positive(p.fit_tau)) problems.add("params.fit_tau must be positive");
          if (!(p.delta > 0.0 && p.delta < 1.0)) problems.add("params.delta must lie in (0, 1)");
          if (!all_positive(p.beta)) problems.add("params.beta must be positive");
          if (p.m == 0) p.m = config.profile.n + 3;
          if (p.m < 1) problems.add("params.m must be >= 1");
          if (p.xi_im == 0.0 && p.xi_re >= 0.0) problems.add("params.xi must lie off [0, inf)");
          if (!(p.laplace_alpha < 0.0)) problems.add("params.laplace_alpha must be negative");
          if (p.laplace_m < 2 || p.laplace_m % 2 != 0) problems.add("params.laplace_m must be even and >= 2");
          if (!(p.laplace_tau_max > 0.0)) problems.add("params.laplace_tau_max must be positive");
          if (p.sample_rows < 1) problems.add("params.sample_rows must be >= 1");
          if (!(p.column_step > 0.0)) problems.add("params.column_step must be positive");
          if (!(p.noise_floor >= 0.0 && p.noise_floor < 1.0)) problems.add("params.noise_floor must lie in [0, 1)");
        }
      },
      config.params);
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::GrowthAudit: return "growth-audit";
    case Experiment::SpectrumFill: return "spectrum-fill";
    case Experiment::WeylSweep: return "weyl-sweep";
    case Experiment::RegionMap: return "region-map";
    case Experiment::HeatAudit: return "heat-audit";
  }
  return "unknown";
}

Experiment parse_experiment(const std::string& name) {
  for (auto e : {Experiment::GrowthAudit, Experiment::SpectrumFill, Experiment::WeylSweep, Experiment::RegionMap,
                 Experiment::HeatAudit}) {
    if (to_string(e) == name) return e;
  }
  throw ConfigError("unknown experiment '" + name +
                    "' (expected growth-audit, spectrum-fill, weyl-sweep, region-map or heat-audit)");
}

WarpingProfile ProfileConfig::build() const {
  switch (family) {
    case ProfileFamily::Polynomial: return WarpingProfile::polynomial(parameter, n);
    case ProfileFamily::QuasiPolynomial: return WarpingProfile::quasi_polynomial(parameter, n);
    case ProfileFamily::Exponential: return WarpingProfile::exponential(parameter, n);
    case ProfileFamily::Tabulated: return WarpingProfile::tabulated(dt, samples, n);
  }
  throw DomainError("unknown profile family");
}

ExperimentConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config is not valid YAML: ") + e.what());
  }
  if (!root.IsMap()) throw ConfigError("config must be a mapping");
  Problems problems;
  ExperimentConfig config;
  Block top(root, "", problems);

  std::string experiment;
  top.read("experiment", experiment, true);
  bool experiment_ok = false;
  if (!experiment.empty()) {
    try {
      config.experiment = parse_experiment(experiment);
      experiment_ok = true;
    } catch (const ConfigError& e) {
      problems.add(e.what());
    }
  }

  top.mark("profile");
  Block profile(root["profile"], "profile", problems);
  if (!root["profile"]) problems.add("missing key 'profile'");
  std::string family;
  profile.read("family", family, true);
  if (!family.empty()) config.profile.family = parse_family(family, problems);
  profile.read("n", config.profile.n, true);
  if (config.profile.family == ProfileFamily::Tabulated) {
    profile.read("dt", config.profile.dt, true);
    profile.read_list("samples", config.profile.samples, true);
  } else if (!family.empty()) {
    profile.read(parameter_key(config.profile.family), config.profile.parameter, true);
  }
  profile.reject_unknown();

  top.mark("grid");
  Block grid(root["grid"], "grid", problems);
  if (!root["grid"]) problems.add("missing key 'grid'");
  grid.read("h", config.grid.h, true);
  grid.read("T_max", config.grid.T_max, true);
  grid.reject_unknown();

  top.mark("params");
  Block params(root["params"], "params", problems);
  if (experiment_ok) {
    parse_params(config.experiment, params, config.params);
    params.reject_unknown();
  }

  top.read("output", config.output);
  top.read("seed", config.seed);
  top.reject_unknown();

  if (problems.empty()) validate(config, problems);
  if (!problems.empty()) problems.raise();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string config_to_json(const ExperimentConfig& config) {
  ordered_json j;
  j["experiment"] = to_string(config.experiment);
  ordered_json profile;
  profile["family"] = to_string(config.profile.family);
  if (config.profile.family == ProfileFamily::Tabulated) {
    profile["dt"] = config.profile.dt;
    profile["samples"] = config.profile.samples;
  } else {
    profile[parameter_key(config.profile.family)] = config.profile.parameter;
  }
  profile["n"] = config.profile.n;
  j["profile"] = profile;
  j["grid"] = {{"h", config.grid.h}, {"T_max", config.grid.T_max}};
  ordered_json p;
  std::visit(
      [&](const auto& v) {
        using P = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<P, GrowthParams>) {
          p["epsilon"] = v.epsilon;
          p["r_grid"] = v.r_grid;
          p["centers"] = v.centers;
          p["t_list"] = v.t_list;
          if (v.K0) p["K0"] = *v.K0;
          ordered_json pairs = ordered_json::array();
          for (const auto& rp : v.radius_pairs) pairs.push_back({rp.r, rp.R});
          p["radius_pairs"] = pairs;
          p["sturm_beta"] = v.sturm_beta;
          p["sturm_T0"] = v.sturm_T0;
          p["sturm_doublings"] = v.sturm_doublings;
          p["volume_step"] = v.volume_step;
        } else if constexpr (std::is_same_v<P, SpectrumParams>) {
          p["T_list"] = v.T_list;
          p["lambda_max"] = v.lambda_max;
          p["oracle_count"] = v.oracle_count;
        } else if constexpr (std::is_same_v<P, WeylParams>) {
          p["lambda"] = v.lambda;
          p["T"] = v.T;
          p["p"] = v.p;
          p["generalized_lambda"] = v.generalized_lambda;
          p["i_min"] = v.i_min;
          p["i_max"] = v.i_max;
          p["x_factor"] = v.x_factor;
          p["y_factor"] = v.y_factor;
          p["harmonic_R"] = v.harmonic_R;
          p["wang_R"] = v.wang_R;
          p["wang_lambda"] = v.wang_lambda;
        } else if constexpr (std::is_same_v<P, RegionParams>) {
          p["p"] = v.p;
          p["z_re"] = v.z_re;
          p["z_im"] = v.z_im;
          p["T"] = v.T;
          p["slope_threshold"] = v.slope_threshold;
          p["sign"] = v.sign;
        } else if constexpr (std::is_same_v<P, HeatParams>) {
          p["tau"] = v.tau;
          p["fit_tau"] = v.fit_tau;
          p["delta"] = v.delta;
          p["beta"] = v.beta;
          p["xi_re"] = v.xi_re;
          p["xi_im"] = v.xi_im;
          p["m"] = v.m;
          p["laplace_alpha"] = v.laplace_alpha;
          p["laplace_m"] = v.laplace_m;
          p["laplace_tau_max"] = v.laplace_tau_max;
          p["sample_rows"] = v.sample_rows;
          p["column_step"] = v.column_step;
          p["noise_floor"] = v.noise_floor;
        }
      },
      config.params);
  j["params"] = p;
  j["output"] = config.output;
  j["seed"] = config.seed;
  return j.dump();
}

}  // namespace speclab
