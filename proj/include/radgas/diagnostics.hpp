#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radgas/spectral.hpp"

namespace radgas {

struct NormRequest {
  std::vector<int> l_list{0, 1, 2};      // ||D^l u|| (and ||D^l q|| when include_q)
  std::vector<double> s_list;            // ||Lambda^{-s} u||
  std::vector<double> lp_list;           // spatial L^p, p in [1, inf]
  bool include_q = true;
  bool include_grad_neg = true;          // ||Lambda^{-s} grad u||
  std::vector<int> monitor_l{0, 1};      // Lyapunov/dissipation/splitting orders
  int budget_order = 0;                  // N for the H^N energy budget; 0 disables it

  void validate(int dim) const;
};

struct SplitRecord {
  double t = 0.0;
  int l = 0;
  double radius = 0.0;
  double low_energy = 0.0;   // sum over |xi| <= radius of |xi|^{2l} |u_hat|^2 (Parseval weighted)
  double high_energy = 0.0;
  bool bound_ok = true;
};

// Per-l quantities needed by the energy monitors, all squared norms.
struct MonitorTerms {
  int l = 0;
  double e_l = 0.0;        // ||D^l u||^2
  double e_next = 0.0;     // ||D^{l+1} u||^2
  double damping = 0.0;    // sum |xi|^2/(1+|xi|^2) |xi|^{2l} |u_hat|^2
  double h1() const { return e_l + e_next; }
};

struct NormRecord {
  double t = 0.0;
  double mass = 0.0;
  double l1 = 0.0;
  double sup_spec = 0.0;
  std::vector<double> u_semis;   // aligned with l_list
  std::vector<double> q_semis;   // aligned with l_list when include_q
  std::vector<double> neg_u;     // aligned with s_list
  std::vector<double> neg_gradu; // aligned with s_list when include_grad_neg
  std::vector<double> lp;        // aligned with lp_list
  std::vector<MonitorTerms> monitors;
  std::vector<SplitRecord> splits;  // aligned with monitor_l; empty at t = 0
  double hn_u_sq = 0.0;         // ||u||^2_{H^N}
  double hn1_q_sq = 0.0;        // ||q||^2_{H^{N+1}}
  double grad_hnm1_sq = 0.0;    // ||grad u||^2_{H^{N-1}}
  double boundary_frac = 0.0;
};

struct NormSeries {
  int dim = 1;
  NormRequest request;
  std::vector<NormRecord> records;

  std::vector<double> times() const;
  // Column names follow the CSV header, e.g. "l2_d1_u", "hneg0.5_gradu".
  std::vector<std::string> column_names() const;
  std::vector<double> column(const std::string& name) const;
  std::vector<double> row(const NormRecord& r) const;
};

// Formats s or p for column names: 0.5 -> "0.5", 1 -> "1".
std::string format_index(double v);

/// Mass fraction of |u| in the outer 10% shell of the box, measured from the
/// box center: points with max_i |x_i - L/2| > 0.9 L/2.
double boundary_fraction(const RealField& u);

NormRecord record_norms(const SpectralField& u_hat, double t, const NormRequest& req);

SplitRecord fourier_split(const SpectralField& u_hat, double t, int l);

enum class Gate { two_sided, one_sided, none };
enum class Verdict { pass, fail, one_sided_pass, ungated };

struct DecayFit {
  std::string quantity;
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::size_t samples = 0;
  double slope = 0.0;
  double stderr_slope = 0.0;
  double r2 = 0.0;
  double theory = 0.0;
  double tolerance = 0.0;
  Gate gate = Gate::none;
  Verdict verdict = Verdict::ungated;
};

/// Least squares of log y on log(1 + t) over samples with t in [t_lo, t_hi].
/// Throws std::invalid_argument on fewer than 10 samples or nonpositive y.
DecayFit fit_power_law(const std::vector<double>& t, const std::vector<double>& y, double t_lo,
                       double t_hi);

DecayFit fit_decay(const NormSeries& series, const std::string& quantity, double t_lo, double t_hi,
                   double theory, double tolerance, Gate gate);

enum class ClaimKind { thm11_u, thm11_q, thm12_u, thm12_q, cor11_u, cor11_q };

/// Exponent p in (1 + t)^p. `param` is s for thm12, p for cor11 and unused for
/// thm11. `order` is N (defaults to floor(n/2) + 2).
double theoretical_exponent(ClaimKind claim, int n, int l, double param = 0.0,
                            std::optional<int> order = std::nullopt);

double cor11_s_of_p(double p);

struct MonitorReport {
  std::string name;
  double value = 0.0;          // constant C, ratio, or worst violation
  double tolerance = 0.0;
  std::size_t violations = 0;
  std::size_t samples = 0;
  bool passed = true;
  std::string note;
};

MonitorReport weighted_inequality_monitor(const NormSeries& series, int l, double l1_initial);
MonitorReport lyapunov_monitor(const NormSeries& series, int l);
MonitorReport dissipation_monitor(const NormSeries& series, int l);
MonitorReport energy_budget(const NormSeries& series, int order, double e0, double budget = 10.0);
MonitorReport negative_energy_monitor(const NormSeries& series, double s, double eta = 0.1);

struct ValidityReport {
  MonitorReport mass;
  MonitorReport spectrum;
  MonitorReport l1;
  MonitorReport boundary;
  MonitorReport splitting;
  bool domain_valid = true;
};

/// check_boundary = false reports boundary_frac without gating it (data that
/// is not localized fills the box by construction).
ValidityReport conservation_and_validity(const NormSeries& series, bool check_boundary = true);

}  // namespace radgas
