#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radgas/errors.hpp"
#include "radgas/model.hpp"

using namespace radgas;

namespace {

constexpr double kPi = std::numbers::pi;

RealField sample(const GridPtr& g, auto fn) {
  RealField f(g);
  for (std::size_t i = 0; i < g->size(); ++i) f.values[i] = fn(g->spacing() * static_cast<double>(i));
  return f;
}

RealField smooth_random(const GridPtr& g, std::uint64_t seed) {
  // Random Fourier data confined to the dealiased band.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  RealField f(g);
  for (auto& v : f.values) v = nd(rng);
  auto fh = dealias(forward_transform(f), 0.25);
  return inverse_transform(fh);
}

double l2(const std::vector<double>& v, double dx) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s * dx);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("flux evaluation") {
  auto g = make_grid(2, 16, 1.0);
  RealField u(g);
  for (auto& v : u.values) v = 0.1;
  for (const auto& f : flux_eval(FluxSpec::quadratic(2), u))
    for (double v : f.values) CHECK(v == doctest::Approx(0.01));

  RealField z(g);
  for (const auto& f : flux_eval(FluxSpec::quadratic(2), z))
    for (double v : f.values) CHECK(v == 0.0);

  for (auto& v : u.values) v = 2.0;
  for (const auto& f : flux_eval(FluxSpec::uniform(2, 0.0, 1.0), u))
    for (double v : f.values) CHECK(v == 8.0);

  CHECK(FluxSpec::quadratic(3).degree() == 2);
  CHECK(FluxSpec::uniform(1, 0.0, 1.0).degree() == 3);
  CHECK(FluxSpec::zero(2).is_zero());
}

TEST_CASE("nonlinear term") {
  auto g = make_grid(1, 64, 2 * kPi);
  auto n = inverse_transform(nonlinear_term(sample(g, [](double x) { return std::sin(x); }), FluxSpec::quadratic(1), 2.0 / 3.0));
  auto expect = sample(g, [](double x) { return -std::sin(2 * x); });
  CHECK(max_abs_diff(n.values, expect.values) < 1e-13);

  RealField c(g);
  for (auto& v : c.values) v = 0.3;
  auto nc = nonlinear_term(c, FluxSpec::quadratic(1), 2.0 / 3.0);
  for (auto z : nc.coeffs) CHECK(std::abs(z) < 1e-15);

  auto g3 = make_grid(3, 16, 5.0);
  auto nr = nonlinear_term(smooth_random(g3, 4), FluxSpec::uniform(3, 1.0, 0.5), 0.5);
  CHECK(nr.coeffs[0] == Complex{});

  RealField huge(g);
  for (auto& v : huge.values) v = 1e200;
  CHECK_THROWS_AS(nonlinear_term(huge, FluxSpec::quadratic(1), 2.0 / 3.0), BlowUpError);
}

TEST_CASE("linear symbol") {
  CHECK(linear_symbol(0.0) == 0.0);
  CHECK(linear_symbol(1.0) == -0.5);
  double prev = 0.0;
  for (double x = 0.01; x < 1e8; x *= 1.7) {
    const double m = linear_symbol(x);
    CHECK(m > -1.0);
    CHECK(m < prev);
    prev = m;
  }
  // Heat-like at low frequency.
  for (double xi = 0.01; xi <= 1.0; xi += 0.01) {
    const double x2 = xi * xi;
    CHECK(std::abs(linear_symbol(x2) + x2) <= x2 * x2 * (1 + 1e-12));
  }
}

TEST_CASE("rhs") {
  auto g = make_grid(1, 64, 2 * kPi);
  auto mode = forward_transform(sample(g, [](double x) { return std::cos(3 * x); }));
  auto r = rhs(mode, FluxSpec::zero(1), 2.0 / 3.0);
  for (std::size_t i = 0; i < r.size(); ++i)
    CHECK(std::abs(r.coeffs[i] - linear_symbol(9.0) * mode.coeffs[i]) < 1e-14);

  SpectralField zero(g);
  for (auto z : rhs(zero, FluxSpec::quadratic(1), 2.0 / 3.0).coeffs) CHECK(z == Complex{});

  const double eps = 1e-8;
  auto small = forward_transform(sample(g, [eps](double x) { return eps * std::sin(x); }));
  auto rs = rhs(small, FluxSpec::quadratic(1), 2.0 / 3.0);
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    err += std::norm(rs.coeffs[i] + 0.5 * small.coeffs[i]);
    ref += std::norm(0.5 * small.coeffs[i]);
  }
  CHECK(std::sqrt(err / ref) <= 1e-6);

  auto g2 = make_grid(2, 16, 6.0);
  auto rr = rhs(forward_transform(smooth_random(g2, 8)), FluxSpec::quadratic(2), 2.0 / 3.0);
  CHECK(hermitian_defect(rr) < 1e-12);
  CHECK(rr.coeffs[0] == Complex{});
}

TEST_CASE("heat flux recovery") {
  auto g = make_grid(1, 64, 2 * kPi);
  auto q = recover_q(forward_transform(sample(g, [](double x) { return std::sin(x); })));
  REQUIRE(q.components.size() == 1);
  auto expect = sample(g, [](double x) { return -std::cos(x) / 2; });
  CHECK(max_abs_diff(q.components[0].values, expect.values) < 1e-14);

  RealField c(g);
  for (auto& v : c.values) v = 4.0;
  const auto qc = recover_q(forward_transform(c));
  for (double v : qc.components[0].values) CHECK(std::abs(v) < 1e-14);

  auto g3 = make_grid(3, 16, 2 * kPi);
  RealField s3(g3);
  const std::size_t stride0 = g3->stride(0);
  for (std::size_t i = 0; i < g3->size(); ++i) s3.values[i] = std::sin(g3->spacing() * static_cast<double>(i / stride0));
  auto q3 = recover_q(forward_transform(s3));
  REQUIRE(q3.components.size() == 3);
  for (std::size_t i = 0; i < g3->size(); ++i) {
    CHECK(std::abs(q3.components[0].values[i] + std::cos(g3->spacing() * static_cast<double>(i / stride0)) / 2) < 1e-13);
    CHECK(std::abs(q3.components[1].values[i]) < 1e-13);
    CHECK(std::abs(q3.components[2].values[i]) < 1e-13);
  }
}

TEST_CASE("heat flux is curl free") {
  auto g = make_grid(2, 16, 6.0);
  auto q = recover_q(forward_transform(smooth_random(g, 2)));
  auto a = apply_multiplier(forward_transform(q.components[1]), MultiplierSpec::partial(0));
  auto b = apply_multiplier(forward_transform(q.components[0]), MultiplierSpec::partial(1));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a.coeffs[i] - b.coeffs[i]) < 1e-12);
}

TEST_CASE("residuals of the coupled system") {
  for (int dim = 1; dim <= 3; ++dim) {
    auto g = make_grid(dim, dim == 1 ? 64 : 16, 8.0);
    auto u = smooth_random(g, 20 + static_cast<std::uint64_t>(dim));
    auto uh = forward_transform(u);
    const auto spec = FluxSpec::quadratic(dim);
    auto [r1, r2] = residual_check(u, recover_q(uh), rhs(uh, spec, 2.0 / 3.0), spec, 2.0 / 3.0);
    const double un = l2(u.values, g->cell_volume());
    CHECK(r1 <= 1e-12 * un);
    CHECK(r2 <= 1e-12 * un);
  }

  auto g = make_grid(1, 64, 2 * kPi);
  auto u = sample(g, [](double x) { return std::sin(x); });
  FluxField q0{g, {RealField(g)}};
  auto [r1, r2] = residual_check(u, q0, SpectralField(g), FluxSpec::zero(1), 2.0 / 3.0);
  (void)r1;
  CHECK(r2 == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));

  auto uh = forward_transform(u);
  auto q = recover_q(uh);
  auto perturbed = [&](double eps) {
    FluxField p = q;
    for (std::size_t i = 0; i < g->size(); ++i) p.components[0].values[i] += eps * std::cos(2 * g->spacing() * static_cast<double>(i));
    return residual_check(u, p, rhs(uh, FluxSpec::zero(1), 2.0 / 3.0), FluxSpec::zero(1), 2.0 / 3.0).second;
  };
  const double a = perturbed(1e-3);
  const double b = perturbed(2e-3);
  CHECK(a > 0.0);
  CHECK(b / a == doctest::Approx(2.0).epsilon(1e-9));
  // (-d^2/dx^2 + 1) cos 2x = 5 cos 2x.
  CHECK(a == doctest::Approx(1e-3 * 5 * std::sqrt(kPi)).epsilon(1e-9));
}
