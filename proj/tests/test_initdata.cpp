#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radgas/initdata.hpp"
#include "radgas/norms.hpp"

using namespace radgas;

namespace {

constexpr double kPi = std::numbers::pi;

double mass(const RealField& u) {
  double s = 0.0;
  for (double v : u.values) s += v;
  return s * u.grid->cell_volume();
}

}  // namespace

TEST_CASE("Gaussian bump") {
  auto g = make_grid(1, 1024, 400.0);
  auto u = gaussian_bump(g, {0.01, 5.0, {}});
  CHECK(mass(u) == doctest::Approx(0.1253314).epsilon(1e-6));
  CHECK(mass(u) == doctest::Approx(0.01 * 5.0 * std::sqrt(2 * kPi)).epsilon(1e-12));
  CHECK(gaussian_mass(1, 0.01, 5.0) == doctest::Approx(0.1253314137).epsilon(1e-9));

  auto z = gaussian_bump(g, {0.0, 5.0, {}});
  for (double v : z.values) CHECK(v == 0.0);

  // Even about the center x = L/2, which sits on grid point M/2.
  for (int j = 1; j < 512; ++j) CHECK(u.values[512 + j] == u.values[512 - j]);
  CHECK(u.values[512] == doctest::Approx(0.01).epsilon(1e-15));

  CHECK_THROWS(gaussian_bump(g, {1.0, 40.0, {}}));
  CHECK_THROWS(gaussian_bump(g, {1.0, 0.0, {}}));
  CHECK_THROWS(gaussian_bump(g, {1.0, 2.0, {1.0, 2.0}}));
}

TEST_CASE("Gaussian mass and seminorms across dimensions") {
  for (int dim = 1; dim <= 3; ++dim) {
    const int m = dim == 1 ? 256 : (dim == 2 ? 128 : 64);
    auto g = make_grid(dim, m, 40.0);
    const double sigma = 3.0;
    auto u = gaussian_bump(g, {0.7, sigma, {}});
    CHECK(mass(u) == doctest::Approx(gaussian_mass(dim, 0.7, sigma)).epsilon(1e-10));
    auto uh = forward_transform(u);
    for (int l = 0; l <= 2; ++l)
      CHECK(derivative_seminorm(uh, l) == doctest::Approx(gaussian_seminorm(dim, 0.7, sigma, l)).epsilon(1e-8));
  }
}

TEST_CASE("off-center Gaussian is periodized") {
  auto g = make_grid(1, 256, 50.0);
  auto u = gaussian_bump(g, {1.0, 2.0, {1.0}});
  CHECK(mass(u) == doctest::Approx(gaussian_mass(1, 1.0, 2.0)).epsilon(1e-12));
  // Point x = 0 is 1 away from the center; point x = L - 1 is 2 away via the image.
  CHECK(u.values[0] == doctest::Approx(std::exp(-1.0 / 8.0)).epsilon(1e-12));
}

TEST_CASE("dipole") {
  for (int dim = 1; dim <= 2; ++dim) {
    auto g = make_grid(dim, dim == 1 ? 1024 : 256, 40.0);
    const double amp = 0.4, sigma = 2.0;
    for (int axis = 0; axis < dim; ++axis) {
      auto u = dipole(g, {amp, sigma, axis});
      const double l1 = lp_norm(u, 1.0);
      CHECK(l1 > 0.0);
      CHECK(std::abs(mass(u)) <= 1e-14 * l1);
      // |d/dx| of the Gaussian integrates to 2 A sigma along the axis; the kink at
      // the center makes the rectangle rule second order.
      const double expect = 2 * amp * sigma * std::pow(sigma * std::sqrt(2 * kPi), dim - 1);
      const double h = g->spacing() / sigma;
      CHECK(l1 == doctest::Approx(expect).epsilon(h * h));
    }
  }
  auto g = make_grid(1, 256, 60.0);
  auto u = dipole(g, {1.0, 2.0, 0});
  for (int j = 1; j < 128; ++j) CHECK(u.values[128 + j] == -u.values[128 - j]);
  CHECK_THROWS(dipole(g, {1.0, 2.0, 1}));
}

TEST_CASE("spectral profile") {
  auto g = make_grid(3, 32, 40.0);
  SpectralProfileParams p{-0.4, 1.0, 42, 1.0};
  auto a = spectral_profile(g, p);
  auto b = spectral_profile(g, p);
  CHECK(a.values == b.values);
  auto c = spectral_profile(g, {-0.4, 1.0, 43, 1.0});
  CHECK(a.values != c.values);

  auto ah = forward_transform(a);
  CHECK(std::abs(ah.coeffs[0]) <= 1e-12 * sup_spectrum(ah));
  CHECK(std::isfinite(negative_norm(ah, 1.0)));
  CHECK(negative_norm(ah, 1.0) > 0.0);

  // Modulus profile |xi|^sigma inside the cutoff, zero outside.
  const auto xi2 = g->xi_squared();
  double ratio = -1.0;
  for (std::size_t i = 1; i < ah.size(); ++i) {
    const double k = std::sqrt(xi2[i]);
    if (k > 1.0) {
      CHECK(std::abs(ah.coeffs[i]) <= 1e-12 * sup_spectrum(ah));
    } else if (std::abs(ah.coeffs[i]) > 0.0) {
      const double r = std::abs(ah.coeffs[i]) / std::pow(k, -0.4);
      if (ratio < 0.0) ratio = r;
      CHECK(r == doctest::Approx(ratio).epsilon(1e-10));
    }
  }

  CHECK_THROWS(spectral_profile(g, {-0.4, 0.01, 42, {}}));
  CHECK_THROWS(spectral_profile(g, {-0.4, 100.0, 42, {}}));
}

TEST_CASE("spectral profile negative norm is refinement stable") {
  for (double s : {0.5, 1.0}) {
    const SpectralProfileParams p{s - 1.5 + 0.1, 1.0, 42, s};
    auto coarse = forward_transform(spectral_profile(make_grid(3, 16, 40.0), p));
    auto fine = forward_transform(spectral_profile(make_grid(3, 32, 40.0), p));
    CHECK(negative_norm(fine, s) == doctest::Approx(negative_norm(coarse, s)).epsilon(0.02));
  }
}

TEST_CASE("rescaling") {
  auto g = make_grid(1, 512, 100.0);
  auto u = gaussian_bump(g, {1.0, 2.0, {}});
  auto r = rescale_to(u, {RescaleNorm::l2, 0, 0.05});
  CHECK(lp_norm(r, 2.0) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(mass(r) / mass(u) == doctest::Approx(r.values[256] / u.values[256]).epsilon(1e-14));

  auto h = rescale_to(u, {RescaleNorm::hn, 3, 0.05});
  CHECK(measure_norm(h, RescaleNorm::hn, 3) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(hk_norm(forward_transform(h), 3) == doctest::Approx(0.05).epsilon(1e-12));
  auto again = rescale_to(h, {RescaleNorm::hn, 3, 0.05});
  CHECK(again.values == h.values);

  CHECK_THROWS(rescale_to(RealField(g), {RescaleNorm::l2, 0, 0.05}));
  CHECK_THROWS(rescale_to(u, {RescaleNorm::l2, 0, 0.0}));
}
