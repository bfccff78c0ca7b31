#include "radgas/initdata.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "radgas/norms.hpp"

namespace radgas {

namespace {

void check_width(const Grid& g, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("Gaussian width must be positive");
  if (sigma > g.length() / 12.0)
    throw std::invalid_argument("Gaussian width exceeds L/12; the tail would reach the boundary");
}

// sum over images m = -2..2 of exp(-(d + mL)^2 / (2 sigma^2)); pairs +-m are
// added first so the result is exactly even in d.
double periodized(double d, double sigma, double length) {
  auto e = [&](double x) { return std::exp(-x * x / (2.0 * sigma * sigma)); };
  return e(d) + (e(d + length) + e(d - length)) + (e(d + 2.0 * length) + e(d - 2.0 * length));
}

// Same image sum for the odd profile (d / sigma) exp(...).
double periodized_odd(double d, double sigma, double length) {
  auto e = [&](double x) { return x / sigma * std::exp(-x * x / (2.0 * sigma * sigma)); };
  return e(d) + (e(d + length) + e(d - length)) + (e(d + 2.0 * length) + e(d - 2.0 * length));
}

// Offsets from the box center, (j - M/2) dx, exactly antisymmetric about j = M/2.
std::vector<double> centered_offsets(const Grid& g) {
  std::vector<double> d(static_cast<std::size_t>(g.points()));
  for (int j = 0; j < g.points(); ++j) d[static_cast<std::size_t>(j)] = (j - g.points() / 2) * g.spacing();
  return d;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

RealField gaussian_bump(const GridPtr& grid, const GaussianParams& p) {
  const Grid& g = *grid;
  check_width(g, p.sigma);
  std::vector<double> center = p.center;
  if (center.empty()) center.assign(static_cast<std::size_t>(g.dim()), 0.5 * g.length());
  if (static_cast<int>(center.size()) != g.dim()) throw std::invalid_argument("Gaussian center has the wrong dimension");

  const bool centered = p.center.empty();
  const auto offsets = centered_offsets(g);
  std::vector<std::vector<double>> factor(static_cast<std::size_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a) {
    auto& f = factor[static_cast<std::size_t>(a)];
    f.resize(static_cast<std::size_t>(g.points()));
    for (int j = 0; j < g.points(); ++j) {
      const double d = centered ? offsets[static_cast<std::size_t>(j)] : j * g.spacing() - center[static_cast<std::size_t>(a)];
      f[static_cast<std::size_t>(j)] = periodized(d, p.sigma, g.length());
    }
  }
  RealField u(grid);
  for (std::size_t i = 0; i < u.size(); ++i) {
    double v = p.amplitude;
    for (int a = 0; a < g.dim(); ++a) v *= factor[static_cast<std::size_t>(a)][static_cast<std::size_t>(g.axis_index(i, a))];
    u.values[i] = v;
  }
  return u;
}

RealField dipole(const GridPtr& grid, const DipoleParams& p) {
  const Grid& g = *grid;
  check_width(g, p.sigma);
  if (p.axis < 0 || p.axis >= g.dim()) throw std::invalid_argument("dipole axis out of range");
  const auto offsets = centered_offsets(g);
  std::vector<double> even(offsets.size());
  std::vector<double> odd(offsets.size());
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    even[j] = periodized(offsets[j], p.sigma, g.length());
    odd[j] = periodized_odd(offsets[j], p.sigma, g.length());
  }
  RealField u(grid);
  for (std::size_t i = 0; i < u.size(); ++i) {
    double v = p.amplitude;
    for (int a = 0; a < g.dim(); ++a) {
      const auto j = static_cast<std::size_t>(g.axis_index(i, a));
      v *= a == p.axis ? odd[j] : even[j];
    }
    u.values[i] = v;
  }
  return u;
}

RealField spectral_profile(const GridPtr& grid, const SpectralProfileParams& p) {
  const Grid& g = *grid;
  const double nyquist = g.dxi() * (g.points() / 2);
  if (!(p.cutoff >= g.dxi())) throw std::invalid_argument("spectral cutoff below the lowest nonzero wavenumber");
  if (p.cutoff > nyquist) throw std::invalid_argument("spectral cutoff exceeds the Nyquist wavenumber");
  if (p.target_s && !(p.sigma_exp > *p.target_s - g.dim() / 2.0))
    std::clog << "warning: spectral_profile exponent " << p.sigma_exp << " does not keep the H^-" << *p.target_s
              << " norm finite under refinement\n";

  const double k2max = p.cutoff * p.cutoff;
  const auto xi2 = g.xi_squared();
  std::mt19937_64 rng(p.seed);
  SpectralField s(grid);
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (xi2[i] == 0.0 || xi2[i] > k2max) continue;
    const std::size_t j = g.negated(i);
    if (j < i) continue;
    bool has_nyquist = false;
    for (int a = 0; a < g.dim(); ++a) has_nyquist = has_nyquist || g.is_nyquist(g.axis_index(i, a));
    if (has_nyquist || j == i) {
      ++skipped;
      continue;
    }
    const double phase = 2.0 * std::numbers::pi * uniform01(rng);
    const Complex c = std::polar(std::pow(xi2[i], 0.5 * p.sigma_exp), phase);
    s.coeffs[i] = c;
    s.coeffs[j] = std::conj(c);
  }
  if (skipped > 0) std::clog << "warning: spectral_profile left " << skipped << " Nyquist modes inside the cutoff at zero\n";
  return inverse_transform(s);
}

double measure_norm(const RealField& u, RescaleNorm norm, int order) {
  if (norm == RescaleNorm::l2) return lp_norm(u, 2.0);
  if (order < 0) throw std::invalid_argument("H^N order must be nonnegative");
  return hk_norm(forward_transform(u), order);
}

RealField rescale_to(const RealField& u, const Rescale& r) {
  if (!(r.target > 0.0)) throw std::invalid_argument("rescale target must be positive");
  const double current = measure_norm(u, r.norm, r.order);
  if (!(current > 0.0)) throw std::invalid_argument("cannot rescale a zero field");
  const double factor = r.target / current;
  // Keeps rescale_to idempotent: a second pass sees factor 1 up to rounding.
  if (std::abs(factor - 1.0) <= 8.0 * std::numeric_limits<double>::epsilon()) return u;
  RealField out = u;
  for (auto& v : out.values) v *= factor;
  return out;
}

double gaussian_mass(int n, double amplitude, double sigma) {
  return amplitude * std::pow(sigma * std::sqrt(2.0 * std::numbers::pi), n);
}

double gaussian_seminorm(int n, double amplitude, double sigma, int l) {
  const double half_n = 0.5 * n;
  const double sq = amplitude * amplitude * std::pow(sigma, n - 2 * l) * std::pow(std::numbers::pi, half_n) *
                    std::exp(std::lgamma(half_n + l) - std::lgamma(half_n));
  return std::sqrt(sq);
}

}  // namespace radgas
