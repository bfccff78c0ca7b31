#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radgas/errors.hpp"
#include "radgas/integrator.hpp"
#include "radgas/norms.hpp"

using namespace radgas;

namespace {

constexpr double kPi = std::numbers::pi;

RealField sample(const GridPtr& g, auto fn) {
  RealField f(g);
  for (std::size_t i = 0; i < g->size(); ++i) f.values[i] = fn(g->spacing() * static_cast<double>(i));
  return f;
}

RealField bump(const GridPtr& g, double amp, double sigma) {
  const double c = g->length() / 2;
  return sample(g, [=](double x) { return amp * std::exp(-(x - c) * (x - c) / (2 * sigma * sigma)); });
}

double rel_dist(const SpectralField& a, const SpectralField& b) {
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    err += std::norm(a.coeffs[i] - b.coeffs[i]);
    ref += std::norm(b.coeffs[i]);
  }
  return ref > 0.0 ? std::sqrt(err / ref) : std::sqrt(err);
}

double max_rel_coeff(const SpectralField& a, const SpectralField& b) {
  double scale = 0.0;
  for (auto c : b.coeffs) scale = std::max(scale, std::abs(c));
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a.coeffs[i] - b.coeffs[i]));
  return err / scale;
}

}  // namespace

TEST_CASE("phi functions") {
  CHECK(phi_function(0, 0.3) == doctest::Approx(std::exp(0.3)).epsilon(1e-15));
  for (double z : {-30.0, -2.0, -0.99, -1e-3, -1e-9, 0.0, 1e-6, 0.5}) {
    const double e = std::exp(z);
    if (std::abs(z) > 1e-2) {
      CHECK(phi_function(1, z) == doctest::Approx((e - 1) / z).epsilon(1e-13));
      CHECK(phi_function(2, z) == doctest::Approx((e - 1 - z) / (z * z)).epsilon(1e-11));
    }
  }
  CHECK(phi_function(1, 0.0) == 1.0);
  CHECK(phi_function(2, 0.0) == 0.5);
  CHECK(phi_function(3, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  // Both sides of the series/closed-form switch against an extended-precision closed form.
  for (long double z : {-0.999999L, -1.000001L, -0.5L, -1e-3L}) {
    const long double ref = (std::exp(z) - 1 - z - z * z / 2) / (z * z * z);
    CHECK(phi_function(3, static_cast<double>(z)) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-11));
  }
}

TEST_CASE("exact linear propagator") {
  auto g = make_grid(1, 64, 2 * kPi);
  auto uh = forward_transform(sample(g, [](double x) { return 0.7 + std::sin(x); }));
  auto e = linear_exact(uh, 2.0);
  CHECK(std::abs(e.coeffs[1] / uh.coeffs[1]) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(e.coeffs[0] == uh.coeffs[0]);
  auto id = linear_exact(uh, 0.0);
  for (std::size_t i = 0; i < uh.size(); ++i) CHECK(id.coeffs[i] == uh.coeffs[i]);
}

TEST_CASE("ETD step reduces to the linear propagator without flux") {
  auto g = make_grid(2, 16, 10.0);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd;
  RealField f(g);
  for (auto& v : f.values) v = nd(rng);
  auto uh = forward_transform(f);
  CHECK(max_rel_coeff(etd_step(uh, 0.37, FluxSpec::zero(2)), linear_exact(uh, 0.37)) <= 1e-14);
}

TEST_CASE("steps conserve the zero mode") {
  auto g = make_grid(1, 128, 40.0);
  auto uh = forward_transform(bump(g, 0.3, 2.0));
  for (auto step : {etd_step, rk4_step}) {
    auto next = step(uh, 0.2, FluxSpec::quadratic(1), 2.0 / 3.0);
    CHECK(std::abs(next.coeffs[0] - uh.coeffs[0]) <= 1e-15 * std::abs(uh.coeffs[0]) * 4);
  }
}

TEST_CASE("RK4 on a single linear mode") {
  auto g = make_grid(1, 64, 2 * kPi);
  auto uh = forward_transform(sample(g, [](double x) { return std::cos(x); }));
  const double dt = 0.1;
  const double z = linear_symbol(1.0) * dt;
  auto next = rk4_step(uh, dt, FluxSpec::zero(1));
  const double ratio = (next.coeffs[1] / uh.coeffs[1]).real();
  CHECK(std::abs(ratio - std::exp(z)) <= std::pow(std::abs(z), 5) / 120);

  SpectralField zero(g);
  for (auto c : rk4_step(zero, dt, FluxSpec::quadratic(1)).coeffs) CHECK(c == Complex{});
}

TEST_CASE("ETDRK4 and RK4 agree to fourth order") {
  auto g = make_grid(1, 128, 40.0);
  auto uh = forward_transform(bump(g, 0.5, 2.0));
  const auto spec = FluxSpec::quadratic(1);
  const double d1 = rel_dist(etd_step(uh, 0.2, spec), rk4_step(uh, 0.2, spec));
  const double d2 = rel_dist(etd_step(uh, 0.1, spec), rk4_step(uh, 0.1, spec));
  CHECK(d1 < 1e-4);
  // One-step local difference is O(dt^5).
  CHECK(std::log2(d1 / d2) > 4.0);
}

TEST_CASE("blow-up is reported") {
  auto g = make_grid(1, 16, 1.0);
  RealField f(g);
  for (std::size_t i = 0; i < f.size(); ++i) f.values[i] = i % 2 ? 1e200 : -1e200;
  CHECK_THROWS_AS(etd_step(forward_transform(f), 0.1, FluxSpec::uniform(1, 1.0, 1.0)), BlowUpError);
}

TEST_CASE("CFL step") {
  auto g = make_grid(1, 64, 6.4);
  RealField u(g);
  for (std::size_t i = 0; i < u.size(); ++i) u.values[i] = i == 3 ? -0.1 : 0.05;
  CHECK(cfl_dt(u, FluxSpec::quadratic(1), 0.4) == doctest::Approx(0.2));
  RealField z(g);
  CHECK(cfl_dt(z, FluxSpec::quadratic(1), 0.4) == 0.5);
  RealField big(g);
  for (auto& v : big.values) v = 1e9;
  CHECK(cfl_dt(big, FluxSpec::quadratic(1), 0.4) == 1e-6);
}

TEST_CASE("scheme config validation") {
  SchemeConfig c;
  CHECK_NOTHROW(c.validate());
  c.t_final = 0.0;
  CHECK_THROWS(c.validate());
  c = SchemeConfig{};
  c.dt_policy = DtPolicy::fixed_step(0.0);
  CHECK_THROWS(c.validate());
  c = SchemeConfig{};
  c.dt_policy = DtPolicy::cfl(1.5);
  CHECK_THROWS(c.validate());
  c = SchemeConfig{};
  c.dt_policy = DtPolicy::fixed_step(0.2);
  c.record_interval = 0.1;
  CHECK_THROWS(c.validate());
}

TEST_CASE("integration without flux is exact") {
  auto g = make_grid(1, 256, 100.0);
  auto u0 = bump(g, 1.0, 2.0);
  SchemeConfig cfg;
  cfg.t_final = 50.0;
  cfg.record_interval = 5.0;
  const auto u0h = forward_transform(u0);
  double worst = 0.0;
  auto traj = integrate(u0, cfg, FluxSpec::zero(1), [&](double t, const SpectralField& s) {
    worst = std::max(worst, max_rel_coeff(s, linear_exact(u0h, t)));
  });
  CHECK(worst <= 1e-10);
  CHECK(max_rel_coeff(traj.final_state, linear_exact(u0h, 50.0)) <= 1e-10);
}

TEST_CASE("recorder bookkeeping, determinism and monotone L2") {
  auto g = make_grid(1, 256, 64.0);
  auto u0 = bump(g, 0.3, 2.0);
  SchemeConfig cfg;
  cfg.t_final = 10.3;
  cfg.record_interval = 1.0;

  std::vector<double> times, l2;
  std::vector<std::vector<Complex>> stream_a;
  auto traj = integrate(u0, cfg, FluxSpec::quadratic(1), [&](double t, const SpectralField& s) {
    times.push_back(t);
    l2.push_back(derivative_seminorm(s, 0));
    stream_a.push_back(s.coeffs);
  });
  CHECK(times.size() == 12);
  CHECK(traj.records == times.size());
  CHECK(times.front() == 0.0);
  CHECK(times.back() == doctest::Approx(10.3));
  for (std::size_t i = 1; i < times.size(); ++i) {
    CHECK(times[i] > times[i - 1]);
    CHECK(l2[i] < l2[i - 1]);
  }

  std::vector<std::vector<Complex>> stream_b;
  integrate(u0, cfg, FluxSpec::quadratic(1), [&](double, const SpectralField& s) { stream_b.push_back(s.coeffs); });
  CHECK(stream_a == stream_b);

  const Complex m0 = stream_a.front()[0];
  for (const auto& s : stream_a) CHECK(std::abs(s[0] - m0) <= 1e-12 * (1 + std::abs(m0)));
}

TEST_CASE("temporal order on a nonlinear benchmark") {
  auto g = make_grid(1, 128, 40.0);
  auto u0h = forward_transform(bump(g, 0.5, 2.0));
  const auto spec = FluxSpec::quadratic(1);
  auto run = [&](auto step, double dt, int n) {
    auto s = u0h;
    for (int i = 0; i < n; ++i) s = step(s, dt, spec, 2.0 / 3.0);
    return s;
  };
  for (auto step : {etd_step, rk4_step}) {
    const auto ref = run(step, 0.2 / 64, 640);
    const double e1 = rel_dist(run(step, 0.2, 10), ref);
    const double e2 = rel_dist(run(step, 0.1, 20), ref);
    const double e3 = rel_dist(run(step, 0.05, 40), ref);
    CHECK(std::log2(e1 / e2) >= 3.5);
    CHECK(std::log2(e2 / e3) >= 3.5);
  }
}

TEST_CASE("wall-time budget aborts cleanly") {
  auto g = make_grid(1, 256, 64.0);
  SchemeConfig cfg;
  cfg.t_final = 1e6;
  cfg.record_interval = 1.0;
  cfg.wall_budget_seconds = 0.05;
  CHECK_THROWS_AS(integrate(bump(g, 0.3, 2.0), cfg, FluxSpec::quadratic(1), [](double, const SpectralField&) {}),
                  WallTimeExceeded);
}
