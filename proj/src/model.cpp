#include "radgas/model.hpp"

#include <cmath>
#include <stdexcept>

#include "radgas/errors.hpp"

namespace radgas {

namespace {

void require_dim(const FluxSpec& spec, const Grid& g) {
  if (spec.dim() != g.dim()) throw std::invalid_argument("flux spec dimension does not match grid");
}

double l2_of_spectral(const SpectralField& s) {
  double acc = 0.0;
  for (const auto& c : s.coeffs) acc += std::norm(c);
  return std::sqrt(acc * s.grid->mode_weight());
}

// i * xi_j with the Nyquist mode along j dropped.
Complex derivative_factor(const Grid& g, std::size_t i, int axis) {
  const int k = g.axis_index(i, axis);
  return {0.0, g.is_nyquist(k) ? 0.0 : g.wavenumber(k)};
}

}  // namespace

bool FluxSpec::is_zero() const {
  for (const auto& a : axes)
    if (!a.is_zero()) return false;
  return true;
}

bool FluxSpec::is_uniform() const {
  for (const auto& a : axes)
    if (!(a == axes.front())) return false;
  return true;
}

int FluxSpec::degree() const {
  int d = 0;
  for (const auto& a : axes) {
    if (a.c3 != 0.0) return 3;
    if (a.c2 != 0.0) d = 2;
  }
  return d;
}

std::vector<RealField> flux_eval(const FluxSpec& spec, const RealField& u) {
  require_dim(spec, *u.grid);
  std::vector<RealField> out;
  out.reserve(spec.axes.size());
  for (const auto& axis : spec.axes) {
    RealField f(u.grid);
    for (std::size_t i = 0; i < u.size(); ++i) f.values[i] = axis.value(u.values[i]);
    out.push_back(std::move(f));
  }
  return out;
}

SpectralField nonlinear_term(const RealField& u, const FluxSpec& spec, double dealias_rule) {
  const Grid& g = *u.grid;
  require_dim(spec, g);
  SpectralField out(u.grid);
  if (spec.is_zero()) return out;

  auto transform_flux = [&](const AxisFlux& axis) {
    RealField f(u.grid);
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double v = axis.value(u.values[i]);
      if (!std::isfinite(v)) throw BlowUpError("flux evaluation overflowed", 0.0);
      f.values[i] = v;
    }
    return forward_transform(f);
  };

  if (spec.is_uniform()) {
    // All axes share one flux: -i (sum_j xi_j) F_hat.
    const SpectralField fh = transform_flux(spec.axes.front());
    const auto xi_sum = g.xi_sum();
    for (std::size_t i = 0; i < g.size(); ++i) out.coeffs[i] = Complex{0.0, -xi_sum[i]} * fh.coeffs[i];
  } else {
    for (int a = 0; a < g.dim(); ++a) {
      const auto& axis = spec.axes[static_cast<std::size_t>(a)];
      if (axis.is_zero()) continue;
      const SpectralField fh = transform_flux(axis);
      for (std::size_t i = 0; i < g.size(); ++i) out.coeffs[i] -= derivative_factor(g, i, a) * fh.coeffs[i];
    }
  }
  out.coeffs[0] = Complex{};
  dealias_inplace(out, dealias_rule);
  return out;
}

SpectralField rhs(const SpectralField& u_hat, const FluxSpec& spec, double dealias_rule) {
  SpectralField out = nonlinear_term(inverse_transform(u_hat), spec, dealias_rule);
  const auto xi2 = u_hat.grid->xi_squared();
  for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] += linear_symbol(xi2[i]) * u_hat.coeffs[i];
  return out;
}

FluxField recover_q(const SpectralField& u_hat) {
  const Grid& g = *u_hat.grid;
  const auto xi2 = g.xi_squared();
  FluxField q{u_hat.grid, {}};
  q.components.reserve(static_cast<std::size_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a) {
    SpectralField qh(u_hat.grid);
    for (std::size_t i = 0; i < g.size(); ++i)
      qh.coeffs[i] = -derivative_factor(g, i, a) * u_hat.coeffs[i] / (1.0 + xi2[i]);
    q.components.push_back(inverse_transform(qh));
  }
  return q;
}

std::pair<double, double> residual_check(const RealField& u, const FluxField& q,
                                         const SpectralField& u_t, const FluxSpec& spec,
                                         double dealias_rule) {
  const Grid& g = *u.grid;
  if (static_cast<int>(q.components.size()) != g.dim())
    throw std::invalid_argument("flux field has the wrong number of components");

  const SpectralField u_hat = forward_transform(u);
  std::vector<SpectralField> q_hat;
  for (const auto& c : q.components) q_hat.push_back(forward_transform(c));

  SpectralField div_q(u.grid);
  for (int a = 0; a < g.dim(); ++a)
    for (std::size_t i = 0; i < g.size(); ++i)
      div_q.coeffs[i] += derivative_factor(g, i, a) * q_hat[static_cast<std::size_t>(a)].coeffs[i];

  // First equation: u_t - N(u) + div q, where N = -sum_j d_j f_j.
  const SpectralField n = nonlinear_term(u, spec, dealias_rule);
  SpectralField r1(u.grid);
  for (std::size_t i = 0; i < g.size(); ++i) r1.coeffs[i] = u_t.coeffs[i] - n.coeffs[i] + div_q.coeffs[i];

  double r2_sq = 0.0;
  for (int a = 0; a < g.dim(); ++a) {
    SpectralField r2(u.grid);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Complex d = derivative_factor(g, i, a);
      r2.coeffs[i] = -d * div_q.coeffs[i] + q_hat[static_cast<std::size_t>(a)].coeffs[i] + d * u_hat.coeffs[i];
    }
    const double part = l2_of_spectral(r2);
    r2_sq += part * part;
  }
  return {l2_of_spectral(r1), std::sqrt(r2_sq)};
}

}  // namespace radgas
