#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radgas/spectral.hpp"

namespace radgas {

struct GaussianParams {
  double amplitude = 1.0;
  double sigma = 1.0;
  std::vector<double> center;  // empty: box center
};

struct DipoleParams {
  double amplitude = 1.0;
  double sigma = 1.0;
  int axis = 0;
};

struct SpectralProfileParams {
  double sigma_exp = 0.0;
  double cutoff = 1.0;
  std::uint64_t seed = 42;
  std::optional<double> target_s;  // warn when the H^{-s} sum would diverge
};

enum class RescaleNorm { l2, hn };

struct Rescale {
  RescaleNorm norm = RescaleNorm::hn;
  int order = 3;         // N for RescaleNorm::hn
  double target = 0.05;
};

// A exp(-|x - c|^2 / (2 sigma^2)), periodized over the two nearest images per axis.
RealField gaussian_bump(const GridPtr& grid, const GaussianParams& p);

// A (x_a - L/2) / sigma exp(-|x - L/2|^2 / (2 sigma^2)), periodized; zero mass.
RealField dipole(const GridPtr& grid, const DipoleParams& p);

/// |u_hat| = |xi|^sigma_exp for 0 < |xi| <= cutoff with seeded Hermitian
/// phases. Modes carrying a Nyquist index are left at zero.
RealField spectral_profile(const GridPtr& grid, const SpectralProfileParams& p);

RealField rescale_to(const RealField& u, const Rescale& r);

double measure_norm(const RealField& u, RescaleNorm norm, int order);

// Continuum values for the Gaussian A exp(-|x|^2/(2 sigma^2)) on R^n.
double gaussian_mass(int n, double amplitude, double sigma);
double gaussian_seminorm(int n, double amplitude, double sigma, int l);  // ||Lambda^l u||

}  // namespace radgas
