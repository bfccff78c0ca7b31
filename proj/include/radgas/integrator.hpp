#pragma once

#include <cstddef>
#include <functional>

#include "radgas/model.hpp"
#include "radgas/spectral.hpp"

namespace radgas {

enum class Scheme { etdrk4, rk4 };

struct DtPolicy {
  enum class Kind { fixed, cfl };
  Kind kind = Kind::cfl;
  double dt = 0.0;       // fixed step
  double safety = 0.4;   // CFL safety factor

  static DtPolicy fixed_step(double dt) { return {Kind::fixed, dt, 0.4}; }
  static DtPolicy cfl(double safety = 0.4) { return {Kind::cfl, 0.0, safety}; }
};

struct SchemeConfig {
  Scheme scheme = Scheme::etdrk4;
  DtPolicy dt_policy = DtPolicy::cfl();
  double t_final = 1.0;
  double record_interval = 0.1;
  double dealias_rule = 2.0 / 3.0;
  double wall_budget_seconds = 3600.0;
  double dt_min = 1e-6;
  double dt_max = 0.5;
  int cfl_refresh_steps = 50;

  void validate() const;
};

struct Trajectory {
  SpectralField final_state;
  std::size_t steps = 0;
  std::size_t records = 0;
  double wall_seconds = 0.0;
};

using Recorder = std::function<void(double t, const SpectralField& u_hat)>;

SpectralField linear_exact(const SpectralField& u0_hat, double t);

// phi_k(z) = sum_j z^j / (j + k)!, with phi_0 = exp.
double phi_function(int k, double z);

SpectralField etd_step(const SpectralField& u_hat, double dt, const FluxSpec& spec,
                       double dealias_rule = 2.0 / 3.0);
SpectralField rk4_step(const SpectralField& u_hat, double dt, const FluxSpec& spec,
                       double dealias_rule = 2.0 / 3.0);

double cfl_dt(const RealField& u, const FluxSpec& spec, double safety, double dt_min = 1e-6,
              double dt_max = 0.5);

/// Advances u0 to cfg.t_final. The recorder sees t = 0, every multiple of the
/// record interval, and t_final. Steps are shortened to land on record times.
Trajectory integrate(const RealField& u0, const SchemeConfig& cfg, const FluxSpec& spec,
                     const Recorder& recorder);

}  // namespace radgas
