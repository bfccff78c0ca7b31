#include "radgas/integrator.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "radgas/errors.hpp"

namespace radgas {

namespace {

constexpr int kTaylorTerms = 30;

bool all_finite(const SpectralField& s) {
  for (const auto& c : s.coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

// Per-shell ETDRK4 weights for one step size.
struct EtdTable {
  double h = -1.0;
  std::vector<double> e, e_half, q, f1, f2, f3;

  void build(const Grid& g, double step) {
    h = step;
    const auto shells = g.shell_xi_squared();
    const std::size_t n = shells.size();
    e.resize(n);
    e_half.resize(n);
    q.resize(n);
    f1.resize(n);
    f2.resize(n);
    f3.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      const double z = h * linear_symbol(shells[s]);
      const double p1 = phi_function(1, z);
      const double p2 = phi_function(2, z);
      const double p3 = phi_function(3, z);
      e[s] = std::exp(z);
      e_half[s] = std::exp(0.5 * z);
      q[s] = 0.5 * h * phi_function(1, 0.5 * z);
      f1[s] = h * (p1 - 3.0 * p2 + 4.0 * p3);
      f2[s] = h * (p2 - 2.0 * p3);
      f3[s] = h * (-p2 + 4.0 * p3);
    }
  }
};

SpectralField nonlinear_of(const SpectralField& v, const FluxSpec& spec, double rule) {
  return nonlinear_term(inverse_transform(v), spec, rule);
}

SpectralField etd_step_with(const SpectralField& v, const EtdTable& tab, const FluxSpec& spec,
                            double rule) {
  const Grid& g = *v.grid;
  const auto id = g.shell_ids();
  const std::size_t n = v.size();

  if (spec.is_zero()) {
    SpectralField out = v;
    for (std::size_t i = 0; i < n; ++i) out.coeffs[i] *= tab.e[id[i]];
    return out;
  }

  const SpectralField nv = nonlinear_of(v, spec, rule);
  SpectralField a(v.grid);
  for (std::size_t i = 0; i < n; ++i) a.coeffs[i] = tab.e_half[id[i]] * v.coeffs[i] + tab.q[id[i]] * nv.coeffs[i];
  const SpectralField na = nonlinear_of(a, spec, rule);
  SpectralField b(v.grid);
  for (std::size_t i = 0; i < n; ++i) b.coeffs[i] = tab.e_half[id[i]] * v.coeffs[i] + tab.q[id[i]] * na.coeffs[i];
  const SpectralField nb = nonlinear_of(b, spec, rule);
  SpectralField c(v.grid);
  for (std::size_t i = 0; i < n; ++i)
    c.coeffs[i] = tab.e_half[id[i]] * a.coeffs[i] + tab.q[id[i]] * (2.0 * nb.coeffs[i] - nv.coeffs[i]);
  const SpectralField nc = nonlinear_of(c, spec, rule);

  SpectralField out(v.grid);
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = id[i];
    out.coeffs[i] = tab.e[s] * v.coeffs[i] + tab.f1[s] * nv.coeffs[i] +
                    2.0 * tab.f2[s] * (na.coeffs[i] + nb.coeffs[i]) + tab.f3[s] * nc.coeffs[i];
  }
  return out;
}

SpectralField axpy(const SpectralField& x, double a, const SpectralField& y) {
  SpectralField out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] += a * y.coeffs[i];
  return out;
}

}  // namespace

void SchemeConfig::validate() const {
  if (!(t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  if (dt_policy.kind == DtPolicy::Kind::fixed && !(dt_policy.dt > 0.0))
    throw std::invalid_argument("fixed dt must be positive");
  if (dt_policy.kind == DtPolicy::Kind::cfl && !(dt_policy.safety > 0.0 && dt_policy.safety <= 1.0))
    throw std::invalid_argument("CFL safety must lie in (0, 1]");
  if (!(dealias_rule > 0.0 && dealias_rule <= 1.0)) throw std::invalid_argument("dealias rule must lie in (0, 1]");
  const double min_dt = dt_policy.kind == DtPolicy::Kind::fixed ? dt_policy.dt : dt_min;
  if (!(record_interval >= min_dt)) throw std::invalid_argument("record interval must be at least dt");
  if (!(dt_min > 0.0 && dt_min <= dt_max)) throw std::invalid_argument("need 0 < dt_min <= dt_max");
  if (cfl_refresh_steps < 1) throw std::invalid_argument("cfl refresh interval must be positive");
}

double phi_function(int k, double z) {
  if (k < 0 || k > 3) throw std::invalid_argument("phi_function supports k = 0..3");
  if (std::abs(z) < 1.0) {
    // Horner on sum_j z^j / (j + k)!
    std::array<double, kTaylorTerms + 4> inv_fact{};
    inv_fact[0] = 1.0;
    for (std::size_t j = 1; j < inv_fact.size(); ++j) inv_fact[j] = inv_fact[j - 1] / static_cast<double>(j);
    double acc = inv_fact[static_cast<std::size_t>(kTaylorTerms + k)];
    for (int j = kTaylorTerms - 1; j >= 0; --j) acc = acc * z + inv_fact[static_cast<std::size_t>(j + k)];
    return acc;
  }
  const double em1 = std::expm1(z);
  switch (k) {
    case 0:
      return em1 + 1.0;
    case 1:
      return em1 / z;
    case 2:
      return (em1 - z) / (z * z);
    default:
      return (em1 - z - 0.5 * z * z) / (z * z * z);
  }
}

SpectralField linear_exact(const SpectralField& u0, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("linear_exact needs t >= 0");
  const Grid& g = *u0.grid;
  const auto shells = g.shell_xi_squared();
  std::vector<double> factor(shells.size());
  for (std::size_t s = 0; s < shells.size(); ++s) factor[s] = std::exp(t * linear_symbol(shells[s]));
  SpectralField out = u0;
  const auto id = g.shell_ids();
  for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] *= factor[id[i]];
  return out;
}

SpectralField etd_step(const SpectralField& u_hat, double dt, const FluxSpec& spec, double dealias_rule) {
  if (!(dt > 0.0)) throw std::invalid_argument("etd_step needs dt > 0");
  EtdTable tab;
  tab.build(*u_hat.grid, dt);
  SpectralField out = etd_step_with(u_hat, tab, spec, dealias_rule);
  if (!all_finite(out)) throw BlowUpError("non-finite state after ETDRK4 step", dt);
  return out;
}

SpectralField rk4_step(const SpectralField& u_hat, double dt, const FluxSpec& spec, double dealias_rule) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step needs dt > 0");
  const SpectralField k1 = rhs(u_hat, spec, dealias_rule);
  const SpectralField k2 = rhs(axpy(u_hat, 0.5 * dt, k1), spec, dealias_rule);
  const SpectralField k3 = rhs(axpy(u_hat, 0.5 * dt, k2), spec, dealias_rule);
  const SpectralField k4 = rhs(axpy(u_hat, dt, k3), spec, dealias_rule);
  SpectralField out = u_hat;
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < out.size(); ++i)
    out.coeffs[i] += w * (k1.coeffs[i] + 2.0 * k2.coeffs[i] + 2.0 * k3.coeffs[i] + k4.coeffs[i]);
  if (!all_finite(out)) throw BlowUpError("non-finite state after RK4 step", dt);
  return out;
}

double cfl_dt(const RealField& u, const FluxSpec& spec, double safety, double dt_min, double dt_max) {
  if (!(safety > 0.0 && safety <= 1.0)) throw std::invalid_argument("CFL safety must lie in (0, 1]");
  double speed = 0.0;
  for (const auto& axis : spec.axes)
    for (double v : u.values) speed = std::max(speed, std::abs(axis.derivative(v)));
  if (!std::isfinite(speed)) return dt_min;
  if (speed == 0.0) return dt_max;
  return std::clamp(safety * u.grid->spacing() / speed, dt_min, dt_max);
}

Trajectory integrate(const RealField& u0, const SchemeConfig& cfg, const FluxSpec& spec,
                     const Recorder& recorder) {
  cfg.validate();
  for (double v : u0.values)
    if (!std::isfinite(v)) throw std::invalid_argument("initial data must be finite");

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  Trajectory traj;
  SpectralField state = forward_transform(u0);
  double t = 0.0;
  recorder(t, state);
  traj.records = 1;

  const bool fixed = cfg.dt_policy.kind == DtPolicy::Kind::fixed;
  double dt = fixed ? cfg.dt_policy.dt : cfl_dt(u0, spec, cfg.dt_policy.safety, cfg.dt_min, cfg.dt_max);
  std::size_t last_refresh = 0;
  EtdTable table;

  const auto full_intervals = static_cast<long>(std::floor(cfg.t_final / cfg.record_interval + 1e-9));
  const bool partial_tail = cfg.t_final - static_cast<double>(full_intervals) * cfg.record_interval >
                            1e-9 * cfg.record_interval;
  const long n_records = full_intervals + (partial_tail ? 1 : 0);

  for (long r = 1; r <= n_records; ++r) {
    const double target = r == n_records ? cfg.t_final : static_cast<double>(r) * cfg.record_interval;
    if (!fixed && traj.steps - last_refresh >= static_cast<std::size_t>(cfg.cfl_refresh_steps)) {
      dt = cfl_dt(inverse_transform(state), spec, cfg.dt_policy.safety, cfg.dt_min, cfg.dt_max);
      last_refresh = traj.steps;
    }
    const double span = target - t;
    const auto nsub = std::max<long>(1, static_cast<long>(std::ceil(span / dt - 1e-9)));
    const double h = span / static_cast<double>(nsub);
    for (long k = 0; k < nsub; ++k) {
      const double t_now = t + static_cast<double>(k + 1) * h;
      try {
        if (cfg.scheme == Scheme::etdrk4) {
          if (table.h != h) table.build(*state.grid, h);
          state = etd_step_with(state, table, spec, cfg.dealias_rule);
        } else {
          state = rk4_step(state, h, spec, cfg.dealias_rule);
        }
      } catch (const BlowUpError& e) {
        throw BlowUpError(e.what(), t_now);
      }
      ++traj.steps;
      if (!all_finite(state)) throw BlowUpError("state became non-finite", t_now);
      if (elapsed() > cfg.wall_budget_seconds)
        throw WallTimeExceeded("wall-time budget exhausted", t_now);
    }
    t = target;
    recorder(t, state);
    ++traj.records;
  }

  traj.final_state = std::move(state);
  traj.wall_seconds = elapsed();
  return traj;
}

}  // namespace radgas
