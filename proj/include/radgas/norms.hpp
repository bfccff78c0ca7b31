#pragma once

#include <optional>

#include "radgas/spectral.hpp"

namespace radgas {

// Every spectral norm below is a lattice Parseval sum
//   (Delta xi / 2 pi)^n * sum_k w(xi_k) |u_hat(xi_k)|^2
// with weight w chosen per norm; spatial norms use the rectangle rule.

// ||D^l u|| taken as ||Lambda^l u||, i.e. w = |xi|^{2l}.
double derivative_seminorm(const SpectralField& u_hat, int l);

// sqrt(sum_{j <= k} ||D^j u||^2).
double hk_norm(const SpectralField& u_hat, int k);

// ||Lambda^{-s} u||, zero mode excluded.
double negative_norm(const SpectralField& u_hat, double s);

// ||Lambda^{-s} grad u||, i.e. w = |xi|^{2 - 2s}, zero mode excluded.
double negative_gradient_norm(const SpectralField& u_hat, double s);

// ||D^l q|| for q = -(I - Delta)^{-1} grad u: w = |xi|^{2l + 2} / (1 + |xi|^2)^2.
double flux_seminorm(const SpectralField& u_hat, int l);

// (dx^n sum |u|^p)^{1/p}; p = infinity gives max |u|.
double lp_norm(const RealField& u, double p);

// max over the lattice of |u_hat|.
double sup_spectrum(const SpectralField& u_hat);

/// ||D^l g|| / (||D^{l+1} g||^{1-theta} ||g||_{H^-s}^theta), theta = 1 / (l + s + 1).
/// Requires a mean-free field; returns nullopt when the denominator vanishes.
std::optional<double> interpolation_gap(const SpectralField& g_hat, int l, double s);

}  // namespace radgas
