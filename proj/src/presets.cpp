#include <stdexcept>

#include "radgas/harness.hpp"

namespace radgas {

namespace {

ClaimSpec claim(const std::string& id, ClaimType type, int l, double param, Gate gate, double tol) {
  ClaimSpec c;
  c.id = id;
  c.type = type;
  c.l = l;
  c.param = param;
  c.gate = gate;
  c.tolerance = tol;
  return c;
}

ExperimentConfig base(const std::string& name, int dim, int points, double length) {
  ExperimentConfig cfg;
  cfg.name = name;
  cfg.dim = dim;
  cfg.points = points;
  cfg.length = length;
  cfg.flux = FluxSpec::quadratic(dim);
  cfg.scheme.t_final = 100.0;
  cfg.scheme.record_interval = 1.0;
  cfg.init.kind = InitSpec::Kind::gaussian;
  cfg.init.gaussian = {1.0, 2.0, {}};
  cfg.init.rescale = Rescale{RescaleNorm::hn, 3, 0.05};
  cfg.norms.budget_order = std::max(3, dim / 2 + 2);
  return cfg;
}

ExperimentConfig thm11(const std::string& name, int dim, int points, double length, double t_final) {
  ExperimentConfig cfg = base(name, dim, points, length);
  cfg.scheme.t_final = t_final;
  cfg.fit_t_lo = 5.0;
  cfg.fit_t_hi = t_final;
  return cfg;
}

// Random-phase data with |u_hat| ~ |xi|^{s - 3/2 + 0.1} below |xi| = 1.
ExperimentConfig thm12(const std::string& name, double s) {
  ExperimentConfig cfg = base(name, 3, 128, 256.0);
  cfg.init.kind = InitSpec::Kind::spectral_profile;
  cfg.init.profile = {s - 1.5 + 0.1, 1.0, 42, s};
  cfg.scheme.t_final = 100.0;
  cfg.fit_t_lo = 10.0;
  cfg.fit_t_hi = 100.0;
  cfg.norms.l_list = {0, 1};
  cfg.norms.s_list = {s};
  cfg.monitors.negative_energy_s = {s};
  return cfg;
}

std::vector<ClaimSpec> thm12_claims(double s) {
  return {claim("thm12_u_l0", ClaimType::thm12_u, 0, s, Gate::one_sided, 0.10),
          claim("thm12_q_l0", ClaimType::thm12_q, 0, s, Gate::one_sided, 0.15),
          claim("heat_oracle_l0", ClaimType::heat_oracle, 0, s, Gate::two_sided, 0.10)};
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"thm11-n1",  "thm11-n2",  "thm11-n3",  "thm11-q-n1",    "thm12-s05",
          "thm12-s10", "cor11-p12", "linear-oracle", "convergence", "smoke-n4"};
}

ExperimentConfig preset_config(const std::string& name) {
  if (name == "thm11-n1") {
    ExperimentConfig cfg = thm11(name, 1, 4096, 400.0, 2000.0);
    cfg.claims = {claim("thm11_u_l0", ClaimType::thm11_u, 0, 0.0, Gate::two_sided, 0.08),
                  claim("thm11_u_l1", ClaimType::thm11_u, 1, 0.0, Gate::two_sided, 0.10),
                  claim("thm11_u_l2", ClaimType::thm11_u, 2, 0.0, Gate::two_sided, 0.15)};
    return cfg;
  }
  if (name == "thm11-q-n1") {
    ExperimentConfig cfg = preset_config("thm11-n1");
    cfg.name = name;
    cfg.claims = {claim("thm11_q_l1", ClaimType::thm11_q, 1, 0.0, Gate::two_sided, 0.15)};
    return cfg;
  }
  if (name == "thm11-n2") {
    ExperimentConfig cfg = thm11(name, 2, 512, 200.0, 400.0);
    cfg.init.gaussian.sigma = 3.0;
    cfg.norms.l_list = {0, 1};
    cfg.claims = {claim("thm11_u_l0", ClaimType::thm11_u, 0, 0.0, Gate::two_sided, 0.10),
                  claim("thm11_u_l1", ClaimType::thm11_u, 1, 0.0, Gate::two_sided, 0.15)};
    return cfg;
  }
  if (name == "thm11-n3") {
    ExperimentConfig cfg = thm11(name, 3, 128, 160.0, 200.0);
    cfg.norms.l_list = {0, 1};
    cfg.claims = {claim("thm11_u_l0", ClaimType::thm11_u, 0, 0.0, Gate::two_sided, 0.15)};
    return cfg;
  }
  if (name == "thm12-s05" || name == "thm12-s10") {
    const double s = name == "thm12-s05" ? 0.5 : 1.0;
    ExperimentConfig cfg = thm12(name, s);
    cfg.claims = thm12_claims(s);
    return cfg;
  }
  if (name == "cor11-p12") {
    ExperimentConfig cfg = thm12(name, 1.0);
    cfg.claims = {claim("cor11_u_l0", ClaimType::cor11_u, 0, 1.2, Gate::one_sided, 0.10),
                  claim("cor11_q_l0", ClaimType::cor11_q, 0, 1.2, Gate::one_sided, 0.15)};
    return cfg;
  }
  if (name == "linear-oracle") {
    ExperimentConfig cfg = base(name, 1, 256, 100.0);
    cfg.flux = FluxSpec::zero(1);
    cfg.scheme.t_final = 100.0;
    cfg.monitors.linear_oracle = true;
    return cfg;
  }
  if (name == "convergence") {
    ExperimentConfig cfg = base(name, 1, 256, 64.0);
    cfg.init.gaussian = {0.5, 2.0, {}};
    cfg.init.rescale.reset();
    cfg.scheme.t_final = 4.0;
    cfg.scheme.record_interval = 0.5;
    cfg.scheme.dt_policy = DtPolicy::fixed_step(0.1);
    cfg.fit_t_lo = 0.0;
    cfg.monitors.weighted = false;
    cfg.convergence = ConvergenceSpec{};
    return cfg;
  }
  if (name == "smoke-n4") {
    ExperimentConfig cfg = base(name, 4, 16, 32.0);
    cfg.init.gaussian.sigma = 2.5;
    cfg.init.rescale = Rescale{RescaleNorm::hn, 4, 0.05};
    cfg.scheme.t_final = 4.0;
    cfg.norms.l_list = {0, 1};
    cfg.monitors.weighted = false;
    return cfg;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace radgas
