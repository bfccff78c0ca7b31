#include "radgas/norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "accumulator.hpp"

namespace radgas {

namespace {

// |xi|^{2l} by repeated multiplication (exact for the integer powers used here).
double int_power(double x, int l) {
  double r = 1.0;
  for (int i = 0; i < l; ++i) r *= x;
  return r;
}

template <typename Weight>
double weighted_sum(const SpectralField& u_hat, Weight weight, bool skip_zero) {
  const auto xi2 = u_hat.grid->xi_squared();
  Accumulator acc;
  for (std::size_t i = skip_zero ? 1 : 0; i < u_hat.size(); ++i) acc.add(weight(xi2[i]) * std::norm(u_hat.coeffs[i]));
  return acc.value() * u_hat.grid->mode_weight();
}

}  // namespace

double derivative_seminorm(const SpectralField& u_hat, int l) {
  if (l < 0) throw std::invalid_argument("derivative order must be nonnegative");
  return std::sqrt(weighted_sum(u_hat, [l](double k2) { return int_power(k2, l); }, false));
}

double hk_norm(const SpectralField& u_hat, int k) {
  if (k < 0) throw std::invalid_argument("Sobolev index must be nonnegative");
  return std::sqrt(weighted_sum(
      u_hat,
      [k](double k2) {
        double acc = 0.0;
        double p = 1.0;
        for (int j = 0; j <= k; ++j, p *= k2) acc += p;
        return acc;
      },
      false));
}

double negative_norm(const SpectralField& u_hat, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("negative_norm needs s > 0");
  return std::sqrt(weighted_sum(u_hat, [s](double k2) { return std::pow(k2, -s); }, true));
}

double negative_gradient_norm(const SpectralField& u_hat, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("negative_gradient_norm needs s > 0");
  return std::sqrt(weighted_sum(u_hat, [s](double k2) { return std::pow(k2, 1.0 - s); }, true));
}

double flux_seminorm(const SpectralField& u_hat, int l) {
  if (l < 0) throw std::invalid_argument("derivative order must be nonnegative");
  return std::sqrt(weighted_sum(
      u_hat,
      [l](double k2) {
        const double d = 1.0 + k2;
        return int_power(k2, l + 1) / (d * d);
      },
      false));
}

double lp_norm(const RealField& u, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm needs p >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : u.values) m = std::max(m, std::abs(v));
    return m;
  }
  Accumulator acc;
  if (p == 1.0) {
    for (double v : u.values) acc.add(std::abs(v));
    return acc.value() * u.grid->cell_volume();
  }
  if (p == 2.0) {
    for (double v : u.values) acc.add(v * v);
    return std::sqrt(acc.value() * u.grid->cell_volume());
  }
  for (double v : u.values) acc.add(std::pow(std::abs(v), p));
  return std::pow(acc.value() * u.grid->cell_volume(), 1.0 / p);
}

double sup_spectrum(const SpectralField& u_hat) {
  double m = 0.0;
  for (const auto& c : u_hat.coeffs) m = std::max(m, std::abs(c));
  return m;
}

std::optional<double> interpolation_gap(const SpectralField& g_hat, int l, double s) {
  if (l < 0 || !(s > 0.0)) throw std::invalid_argument("interpolation_gap needs l >= 0 and s > 0");
  const double lhs = derivative_seminorm(g_hat, l);
  const double scale = std::max(lhs, std::numeric_limits<double>::min());
  if (std::abs(g_hat.zero_mode()) * std::sqrt(g_hat.grid->mode_weight()) > 1e-10 * scale)
    throw std::invalid_argument("interpolation_gap needs a mean-free field");

  const double theta = 1.0 / (l + s + 1.0);
  const double upper = derivative_seminorm(g_hat, l + 1);
  const double lower = negative_norm(g_hat, s);
  const double denom = std::pow(upper, 1.0 - theta) * std::pow(lower, theta);
  if (!(denom > 0.0)) return std::nullopt;
  return lhs / denom;
}

}  // namespace radgas
