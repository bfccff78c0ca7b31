#pragma once

#include <utility>
#include <vector>

#include "radgas/spectral.hpp"

namespace radgas {

/// f_j(u) = c2 u^2 + c3 u^3. No constant or linear part by construction.
struct AxisFlux {
  double c2 = 1.0;
  double c3 = 0.0;

  double value(double u) const { return u * u * (c2 + c3 * u); }
  double derivative(double u) const { return u * (2.0 * c2 + 3.0 * c3 * u); }
  bool is_zero() const { return c2 == 0.0 && c3 == 0.0; }
  friend bool operator==(const AxisFlux&, const AxisFlux&) = default;
};

/// Per-axis polynomial flux of degree at most three.
struct FluxSpec {
  std::vector<AxisFlux> axes;

  static FluxSpec quadratic(int dim) { return uniform(dim, 1.0, 0.0); }
  static FluxSpec zero(int dim) { return uniform(dim, 0.0, 0.0); }
  static FluxSpec uniform(int dim, double c2, double c3) {
    return FluxSpec{std::vector<AxisFlux>(static_cast<std::size_t>(dim), AxisFlux{c2, c3})};
  }

  int dim() const { return static_cast<int>(axes.size()); }
  bool is_zero() const;
  bool is_uniform() const;
  int degree() const;
};

struct FluxField {
  GridPtr grid;
  std::vector<RealField> components;
};

std::vector<RealField> flux_eval(const FluxSpec& spec, const RealField& u);

// -sum_j d/dx_j f_j(u), evaluated pseudo-spectrally and dealiased. Throws
// BlowUpError if the pointwise flux overflows.
SpectralField nonlinear_term(const RealField& u, const FluxSpec& spec, double dealias_rule);

// m(xi) = -|xi|^2 / (1 + |xi|^2), the symbol of -u + (I - Delta)^{-1} u.
inline double linear_symbol(double xi_squared) { return -xi_squared / (1.0 + xi_squared); }

SpectralField rhs(const SpectralField& u_hat, const FluxSpec& spec, double dealias_rule);

// q = -(I - Delta)^{-1} grad u.
FluxField recover_q(const SpectralField& u_hat);

/// L2 norms of the residuals of
///   u_t + sum_j f_j(u)_{x_j} + div q = 0   and   -grad div q + q + grad u = 0.
/// The flux divergence is evaluated with the same dealiasing as rhs(), so the
/// pair (u, recover_q(u)) with u_t = rhs(u) has zero residuals up to roundoff
/// for fields without Nyquist content.
std::pair<double, double> residual_check(const RealField& u, const FluxField& q,
                                         const SpectralField& u_t, const FluxSpec& spec,
                                         double dealias_rule);

}  // namespace radgas
