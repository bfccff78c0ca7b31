#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radgas/diagnostics.hpp"
#include "radgas/initdata.hpp"
#include "radgas/integrator.hpp"
#include "radgas/model.hpp"

namespace radgas {

using Json = nlohmann::json;

struct InitSpec {
  enum class Kind { gaussian, dipole, spectral_profile };
  Kind kind = Kind::gaussian;
  GaussianParams gaussian;
  DipoleParams dipole;
  SpectralProfileParams profile;
  std::optional<Rescale> rescale;
};

enum class ClaimType {
  thm11_u,
  thm11_q,
  thm12_u,
  thm12_q,
  cor11_u,
  cor11_q,
  heat_oracle,        // -(2 sigma_exp + n)/4 for spectral_profile data, u only
  linear_prediction,  // slope of the same quantity under the exact linear flow
};

struct ClaimSpec {
  std::string id;
  ClaimType type = ClaimType::thm11_u;
  int l = 0;
  double param = 0.0;     // s (thm12) or p (cor11)
  std::string quantity;   // CSV column; derived from type and l when empty
  Gate gate = Gate::two_sided;
  double tolerance = 0.1;
  std::optional<double> t_lo;
  std::optional<double> t_hi;
};

struct MonitorSpec {
  bool lyapunov = true;
  bool dissipation = true;
  bool weighted = true;
  double energy_budget = 10.0;
  std::vector<double> negative_energy_s;
  double eta = 0.1;
  std::optional<bool> boundary;  // unset: gate only localized data
  bool linear_oracle = false;
  double linear_oracle_tolerance = 1e-10;
};

struct ConvergenceSpec {
  int levels = 4;
  double reference_divisor = 128.0;
  std::vector<Scheme> schemes{Scheme::etdrk4, Scheme::rk4};
  double min_order = 3.5;
};

struct ExperimentConfig {
  std::string name = "experiment";
  int dim = 1;
  int points = 256;
  double length = 100.0;
  InitSpec init;
  FluxSpec flux = FluxSpec::quadratic(1);
  SchemeConfig scheme;
  NormRequest norms;
  std::optional<double> fit_t_lo;
  std::optional<double> fit_t_hi;
  std::vector<ClaimSpec> claims;
  MonitorSpec monitors;
  std::optional<ConvergenceSpec> convergence;
  std::string output_dir = "out";

  void validate() const;
  double default_t_lo() const;
  double default_t_hi() const;
};

/// Throws ConfigError naming the offending key or violated invariant.
ExperimentConfig parse_config(const Json& doc);
ExperimentConfig parse_config_file(const std::string& path);
Json emit_config(const ExperimentConfig& cfg);
std::string config_digest(const ExperimentConfig& cfg);

std::string claim_type_name(ClaimType t);
std::string default_quantity(const ClaimSpec& c);
// Theoretical exponent for a claim, or nullopt for linear_prediction.
std::optional<double> claim_exponent(const ClaimSpec& c, const ExperimentConfig& cfg);

struct ClaimResult {
  std::string id;
  std::string type;
  DecayFit fit;
  std::string error;  // nonempty when the fit could not be produced

  bool passed() const;
};

struct RunSummary {
  std::string name;
  std::string digest;
  Json config;
  bool completed = true;
  std::string failure;
  double t_reached = 0.0;
  std::size_t steps = 0;
  std::size_t records = 0;
  bool domain_valid = true;
  std::vector<ClaimResult> claims;
  std::vector<MonitorReport> monitors;
  bool passed = false;
  double wall_seconds = 0.0;  // not serialized; summaries stay byte-deterministic
};

struct Simulation {
  NormSeries series;
  SpectralField u0_hat;
  bool completed = true;
  std::string failure;
  double t_reached = 0.0;
  std::size_t steps = 0;
  double wall_seconds = 0.0;
  double linear_oracle_error = 0.0;
};

RealField build_initial(const ExperimentConfig& cfg);
Simulation simulate(const ExperimentConfig& cfg);
RunSummary evaluate(const ExperimentConfig& cfg, const Simulation& sim);

/// simulate + evaluate + write <out>/<name>.csv and <out>/<name>.summary.json.
/// Blow-ups and wall-time overruns end up as failed summaries.
RunSummary run_experiment(const ExperimentConfig& cfg);
RunSummary run_convergence(const ExperimentConfig& cfg);

std::vector<std::string> preset_names();
ExperimentConfig preset_config(const std::string& name);
RunSummary run_preset(const std::string& name, const std::optional<std::string>& out_dir = std::nullopt);

Json summary_to_json(const RunSummary& s);
RunSummary summary_from_json(const Json& j);

void write_series_csv(const NormSeries& series, const std::string& path);
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<double> column(const std::string& name) const;
};
CsvTable read_csv(const std::string& path);

/// Plan: {"runs": [{"preset": NAME, "overrides": {...}} | {"config": {...}}], "output_dir": DIR}.
Json sweep(const Json& plan, int jobs);

struct VerifyResult {
  int exit_code = 0;
  std::string report;
};
VerifyResult verify(const std::string& directory);

/// CSV of m(xi) and exp(t m(xi)) for |xi| in wavenumbers and each t.
std::string linear_table(int n, const std::vector<double>& wavenumbers, const std::vector<double>& times);

std::string format_double(double v);

}  // namespace radgas
