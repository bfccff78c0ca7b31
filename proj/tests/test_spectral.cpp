#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radgas/spectral.hpp"

using namespace radgas;

namespace {

constexpr double kPi = std::numbers::pi;

RealField sample(const GridPtr& g, auto fn) {
  RealField f(g);
  for (std::size_t i = 0; i < g->size(); ++i) f.values[i] = fn(g->spacing() * static_cast<double>(i));
  return f;
}

RealField random_field(const GridPtr& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  RealField f(g);
  for (auto& v : f.values) v = nd(rng);
  return f;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("grid construction") {
  auto g = make_grid(1, 16, 2 * kPi);
  CHECK(g->size() == 16);
  CHECK(g->spacing() == doctest::Approx(2 * kPi / 16));
  CHECK(g->signed_index(0) == 0);
  CHECK(g->signed_index(7) == 7);
  CHECK(g->signed_index(8) == -8);
  CHECK(g->signed_index(15) == -1);
  CHECK(g->wavenumber(15) == doctest::Approx(-1.0));

  auto g2 = make_grid(2, 32, 10.0);
  CHECK(g2->size() == 1024);
  CHECK(g2->dxi() == doctest::Approx(2 * kPi / 10));
  CHECK(g2->spacing() * 32 == 10.0);

  CHECK_THROWS(make_grid(1, 15, 2 * kPi));
  CHECK_THROWS(make_grid(1, 8, 2 * kPi));
  CHECK_THROWS(make_grid(1, 16, 0.0));
  CHECK_THROWS(make_grid(5, 16, 1.0));
  CHECK_THROWS(make_grid(3, 64, 1.0, 1000));
}

TEST_CASE("negated index is an involution") {
  auto g = make_grid(3, 16, 5.0);
  for (std::size_t i = 0; i < g->size(); i += 37) CHECK(g->negated(g->negated(i)) == i);
}

TEST_CASE("transform of constants and single modes") {
  auto g = make_grid(2, 16, 3.0);
  RealField c(g);
  for (auto& v : c.values) v = 2.5;
  auto ch = forward_transform(c);
  CHECK(ch.coeffs[0].real() == doctest::Approx(2.5 * 9.0));
  for (std::size_t i = 1; i < ch.size(); ++i) CHECK(std::abs(ch.coeffs[i]) < 1e-12);

  auto g1 = make_grid(1, 64, 2 * kPi);
  auto sh = forward_transform(sample(g1, [](double x) { return std::sin(x); }));
  CHECK(std::abs(sh.coeffs[1] - Complex(0, -kPi)) < 1e-12);
  CHECK(std::abs(sh.coeffs[63] - Complex(0, kPi)) < 1e-12);
  for (std::size_t i = 2; i < 63; ++i) CHECK(std::abs(sh.coeffs[i]) < 1e-12);
}

TEST_CASE("round trip and Hermitian symmetry") {
  for (int dim = 1; dim <= 3; ++dim) {
    auto g = make_grid(dim, 16, 7.0);
    auto f = random_field(g, 11 + static_cast<std::uint64_t>(dim));
    auto fh = forward_transform(f);
    auto back = inverse_transform(fh);
    CHECK(max_abs_diff(back.values, f.values) <= 1e-13 * max_abs(f.values));
    CHECK(hermitian_defect(fh) < 1e-12 * std::abs(fh.coeffs[0]) + 1e-12);
  }
}

TEST_CASE("size mismatch is rejected") {
  auto g = make_grid(1, 16, 1.0);
  CHECK_THROWS(RealField(g, std::vector<double>(15)));
  CHECK_THROWS(SpectralField(g, std::vector<Complex>(17)));
}

TEST_CASE("Parseval") {
  for (int dim = 1; dim <= 3; ++dim) {
    auto g = make_grid(dim, 16, 4.0);
    auto f = random_field(g, 5);
    auto fh = forward_transform(f);
    double phys = 0.0;
    for (double v : f.values) phys += v * v;
    phys *= g->cell_volume();
    double spec = 0.0;
    for (auto c : fh.coeffs) spec += std::norm(c);
    spec *= g->mode_weight();
    CHECK(std::abs(phys - spec) <= 1e-12 * phys);
  }
}

TEST_CASE("multipliers on eigenfunctions") {
  auto g = make_grid(1, 64, 2 * kPi);
  auto cosx = forward_transform(sample(g, [](double x) { return std::cos(x); }));
  auto half = inverse_transform(apply_multiplier(cosx, MultiplierSpec::inv_helmholtz()));
  auto expect_half = sample(g, [](double x) { return std::cos(x) / 2; });
  CHECK(max_abs_diff(half.values, expect_half.values) < 1e-14);

  auto sin2 = forward_transform(sample(g, [](double x) { return std::sin(2 * x); }));
  auto r = inverse_transform(apply_multiplier(sin2, MultiplierSpec::riesz(1.0)));
  auto expect_r = sample(g, [](double x) { return 2 * std::sin(2 * x); });
  CHECK(max_abs_diff(r.values, expect_r.values) < 1e-13);

  auto one_plus = forward_transform(sample(g, [](double x) { return 1 + std::sin(x); }));
  auto neg = inverse_transform(apply_multiplier(one_plus, MultiplierSpec::riesz(-1.0, ZeroModePolicy::annihilate)));
  auto expect_neg = sample(g, [](double x) { return std::sin(x); });
  CHECK(max_abs_diff(neg.values, expect_neg.values) < 1e-14);

  auto lap = inverse_transform(apply_multiplier(sin2, MultiplierSpec::laplacian()));
  auto expect_lap = sample(g, [](double x) { return -4 * std::sin(2 * x); });
  CHECK(max_abs_diff(lap.values, expect_lap.values) < 1e-12);
}

TEST_CASE("negative Riesz power needs annihilation") {
  auto g = make_grid(1, 16, 1.0);
  SpectralField z(g);
  CHECK_THROWS(apply_multiplier(z, MultiplierSpec::riesz(-0.5)));
}

TEST_CASE("derivative exactness for every resolved wavenumber") {
  auto g = make_grid(1, 32, 2 * kPi);
  for (int k = 1; k < 16; ++k) {
    const double kk = k;
    auto d = inverse_transform(
        apply_multiplier(forward_transform(sample(g, [kk](double x) { return std::sin(kk * x); })),
                         MultiplierSpec::partial(0)));
    auto expect = sample(g, [kk](double x) { return kk * std::cos(kk * x); });
    CHECK(max_abs_diff(d.values, expect.values) <= 1e-12 * kk);
  }
}

TEST_CASE("multipliers commute and Riesz powers invert") {
  auto g = make_grid(2, 16, 6.0);
  auto fh = forward_transform(random_field(g, 3));
  auto a = apply_multiplier(apply_multiplier(fh, MultiplierSpec::inv_helmholtz()), MultiplierSpec::partial(1));
  auto b = apply_multiplier(apply_multiplier(fh, MultiplierSpec::partial(1)), MultiplierSpec::inv_helmholtz());
  // Real factors applied in either order differ only by rounding.
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a.coeffs[i] - b.coeffs[i]) <= 4e-16 * std::abs(a.coeffs[i]));

  fh.coeffs[0] = 0.0;
  auto rt = apply_multiplier(apply_multiplier(fh, MultiplierSpec::riesz(-0.7, ZeroModePolicy::annihilate)),
                             MultiplierSpec::riesz(0.7));
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < fh.size(); ++i) {
    err += std::norm(rt.coeffs[i] - fh.coeffs[i]);
    ref += std::norm(fh.coeffs[i]);
  }
  CHECK(std::sqrt(err / ref) <= 1e-12);
}

TEST_CASE("multipliers keep real data Hermitian") {
  auto g = make_grid(2, 16, 6.0);
  auto fh = forward_transform(random_field(g, 9));
  const double scale = std::abs(fh.coeffs[0]) + 1.0;
  CHECK(hermitian_defect(apply_multiplier(fh, MultiplierSpec::partial(0))) < 1e-12 * scale);
  CHECK(hermitian_defect(apply_multiplier(fh, MultiplierSpec::partial(1))) < 1e-12 * scale);
  CHECK(hermitian_defect(apply_multiplier(fh, MultiplierSpec::riesz(0.5))) < 1e-12 * scale);
}

TEST_CASE("dealiasing") {
  CHECK(dealias_cutoff(32, 2.0 / 3.0) == 10);
  auto g = make_grid(1, 32, 1.0);
  auto fh = forward_transform(random_field(g, 1));
  auto d = dealias(fh, 2.0 / 3.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int k = std::abs(g->signed_index(static_cast<int>(i)));
    if (k > 10) CHECK(d.coeffs[i] == Complex{});
    else CHECK(d.coeffs[i] == fh.coeffs[i]);
  }
  auto dd = dealias(d, 2.0 / 3.0);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(dd.coeffs[i] == d.coeffs[i]);
  auto id = dealias(fh, 1.0);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(id.coeffs[i] == fh.coeffs[i]);
  CHECK_THROWS(dealias(fh, 0.0));
  CHECK_THROWS(dealias(fh, 1.5));
}
