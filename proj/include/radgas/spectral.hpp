#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace radgas {

using Complex = std::complex<double>;

/// Cubic periodic box [0, L)^n sampled with M points per axis.
///
/// Modes are stored in FFT order: storage index k in [0, M) corresponds to the
/// signed wavenumber index k for k < M/2 and k - M otherwise, so the signed
/// lattice is [-M/2, M/2). The angular wavenumber is xi = (2 pi / L) * index.
/// Flat indices are row-major with axis 0 slowest.
class Grid {
 public:
  static constexpr int kMaxDim = 4;
  static constexpr std::size_t kDefaultModeCap = std::size_t{1} << 27;

  Grid(int dim, int points, double length, std::size_t mode_cap = kDefaultModeCap);

  int dim() const { return dim_; }
  int points() const { return points_; }
  double length() const { return length_; }
  double spacing() const { return spacing_; }
  double dxi() const { return dxi_; }
  std::size_t size() const { return size_; }

  // Delta x^n, the quadrature weight of one grid point.
  double cell_volume() const { return cell_volume_; }
  // (Delta xi / 2 pi)^n, the Parseval weight of one lattice mode.
  double mode_weight() const { return mode_weight_; }

  int signed_index(int k) const { return k < points_ / 2 ? k : k - points_; }
  double wavenumber(int k) const { return dxi_ * signed_index(k); }
  bool is_nyquist(int k) const { return k == points_ / 2; }

  std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }
  // Storage index along `axis` of the flat mode or point index.
  int axis_index(std::size_t flat, int axis) const {
    return static_cast<int>((flat / stride(axis)) % static_cast<std::size_t>(points_));
  }
  // Flat index of the mode -xi (Hermitian partner).
  std::size_t negated(std::size_t flat) const;

  // |xi|^2 for every mode in storage order.
  std::span<const double> xi_squared() const { return xi_sq_; }
  // Modes sharing |xi|^2 share a shell; shell_xi_squared()[shell_ids()[i]] == xi_squared()[i].
  std::span<const std::uint32_t> shell_ids() const { return shell_id_; }
  std::span<const double> shell_xi_squared() const { return shell_xi_sq_; }
  // sum_j xi_j with Nyquist components dropped (symbol of sum_j d/dx_j is i times this).
  std::span<const double> xi_sum() const { return xi_sum_; }
  // max_j |signed index_j| per mode.
  std::span<const std::uint32_t> max_abs_index() const { return max_index_; }

 private:
  int dim_;
  int points_;
  double length_;
  double spacing_;
  double dxi_;
  std::size_t size_;
  double cell_volume_;
  double mode_weight_;
  std::array<std::size_t, kMaxDim> strides_{};
  std::vector<double> xi_sq_;
  std::vector<std::uint32_t> shell_id_;
  std::vector<double> shell_xi_sq_;
  std::vector<double> xi_sum_;
  std::vector<std::uint32_t> max_index_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int dim, int points, double length,
                  std::size_t mode_cap = Grid::kDefaultModeCap);

/// Point samples of a real scalar on the grid.
struct RealField {
  GridPtr grid;
  std::vector<double> values;

  RealField() = default;
  explicit RealField(GridPtr g) : grid(std::move(g)), values(grid->size(), 0.0) {}
  RealField(GridPtr g, std::vector<double> v);

  std::size_t size() const { return values.size(); }
};

/// Discrete Fourier coefficients, u_hat(xi_k) = dx^n * sum_j u(x_j) exp(-i xi_k . x_j).
struct SpectralField {
  GridPtr grid;
  std::vector<Complex> coeffs;

  SpectralField() = default;
  explicit SpectralField(GridPtr g) : grid(std::move(g)), coeffs(grid->size(), Complex{}) {}
  SpectralField(GridPtr g, std::vector<Complex> c);

  std::size_t size() const { return coeffs.size(); }
  Complex zero_mode() const { return coeffs.front(); }
};

SpectralField forward_transform(const RealField& f);
RealField inverse_transform(const SpectralField& g);

// Largest |u_hat(xi) - conj(u_hat(-xi))| over the lattice.
double hermitian_defect(const SpectralField& g);

enum class ZeroModePolicy { keep, annihilate };

/// A diagonal Fourier multiplier.
struct MultiplierSpec {
  enum class Kind { partial_derivative, laplacian, inv_helmholtz, riesz_power };

  Kind kind = Kind::laplacian;
  int axis = 0;
  double power = 0.0;
  ZeroModePolicy zero_mode = ZeroModePolicy::keep;

  static MultiplierSpec partial(int axis) { return {Kind::partial_derivative, axis, 0.0, ZeroModePolicy::keep}; }
  static MultiplierSpec laplacian() { return {Kind::laplacian, 0, 0.0, ZeroModePolicy::keep}; }
  static MultiplierSpec inv_helmholtz() { return {Kind::inv_helmholtz, 0, 0.0, ZeroModePolicy::keep}; }
  static MultiplierSpec riesz(double s, ZeroModePolicy policy = ZeroModePolicy::keep) {
    return {Kind::riesz_power, 0, s, policy};
  }
};

// Odd derivatives drop the Nyquist mode along their axis so real fields stay real.
SpectralField apply_multiplier(const SpectralField& g, const MultiplierSpec& m);
void apply_multiplier_inplace(SpectralField& g, const MultiplierSpec& m);

// Highest retained signed index for a dealiasing fraction: floor(rule * M / 2).
int dealias_cutoff(int points, double rule);

// Zeroes every mode with |k| > rule * M / 2 along any axis.
SpectralField dealias(const SpectralField& g, double rule);
void dealias_inplace(SpectralField& g, double rule);

}  // namespace radgas
