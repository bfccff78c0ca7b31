#include "radgas/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace radgas {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// One in-place forward/backward plan pair with its own aligned buffer.
class FftPlan {
 public:
  FftPlan(int dim, int points) : size_(1) {
    std::array<int, Grid::kMaxDim> dims{};
    for (int a = 0; a < dim; ++a) {
      dims[static_cast<std::size_t>(a)] = points;
      size_ *= static_cast<std::size_t>(points);
    }
    std::lock_guard lock(planner_mutex());
    buffer_ = fftw_alloc_complex(size_);
    if (buffer_ == nullptr) throw std::bad_alloc();
    forward_ = fftw_plan_dft(dim, dims.data(), buffer_, buffer_, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft(dim, dims.data(), buffer_, buffer_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
    fftw_free(buffer_);
  }

  Complex* data() { return reinterpret_cast<Complex*>(buffer_); }
  void forward() { fftw_execute(forward_); }
  void backward() { fftw_execute(backward_); }

 private:
  std::size_t size_;
  fftw_complex* buffer_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

FftPlan& plan_for(const Grid& g) {
  thread_local std::map<std::pair<int, int>, std::unique_ptr<FftPlan>> cache;
  auto& slot = cache[{g.dim(), g.points()}];
  if (!slot) slot = std::make_unique<FftPlan>(g.dim(), g.points());
  return *slot;
}

}  // namespace

Grid::Grid(int dim, int points, double length, std::size_t mode_cap)
    : dim_(dim), points_(points), length_(length) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("grid dimension must be in 1..4");
  if (!is_power_of_two(points) || points < 16)
    throw std::invalid_argument("grid points must be a power of two >= 16, got " + std::to_string(points));
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("grid length must be positive");

  size_ = 1;
  for (int a = 0; a < dim; ++a) {
    if (size_ > mode_cap / static_cast<std::size_t>(points))
      throw std::invalid_argument("grid exceeds the mode cap of " + std::to_string(mode_cap));
    size_ *= static_cast<std::size_t>(points);
  }
  spacing_ = length / points;
  dxi_ = 2.0 * std::numbers::pi / length;
  cell_volume_ = std::pow(spacing_, dim);
  mode_weight_ = std::pow(dxi_ / (2.0 * std::numbers::pi), dim);

  std::size_t s = 1;
  for (int a = dim - 1; a >= 0; --a) {
    strides_[static_cast<std::size_t>(a)] = s;
    s *= static_cast<std::size_t>(points);
  }

  xi_sq_.assign(size_, 0.0);
  xi_sum_.assign(size_, 0.0);
  max_index_.assign(size_, 0);
  std::vector<std::uint64_t> shell_key(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    double sum = 0.0;
    std::uint64_t key = 0;
    std::uint32_t biggest = 0;
    for (int a = 0; a < dim; ++a) {
      const int k = axis_index(i, a);
      const auto ks = static_cast<std::int64_t>(signed_index(k));
      if (!is_nyquist(k)) sum += wavenumber(k);
      key += static_cast<std::uint64_t>(ks * ks);
      biggest = std::max(biggest, static_cast<std::uint32_t>(ks < 0 ? -ks : ks));
    }
    xi_sum_[i] = sum;
    max_index_[i] = biggest;
    shell_key[i] = key;
  }

  std::map<std::uint64_t, std::uint32_t> shells;
  for (auto key : shell_key) shells.emplace(key, 0);
  shell_xi_sq_.reserve(shells.size());
  for (auto& [key, id] : shells) {
    id = static_cast<std::uint32_t>(shell_xi_sq_.size());
    shell_xi_sq_.push_back(dxi_ * dxi_ * static_cast<double>(key));
  }
  shell_id_.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    shell_id_[i] = shells.at(shell_key[i]);
    xi_sq_[i] = shell_xi_sq_[shell_id_[i]];
  }
}

std::size_t Grid::negated(std::size_t flat) const {
  std::size_t out = 0;
  for (int a = 0; a < dim_; ++a) {
    const int k = axis_index(flat, a);
    const int nk = (points_ - k) % points_;
    out += static_cast<std::size_t>(nk) * stride(a);
  }
  return out;
}

GridPtr make_grid(int dim, int points, double length, std::size_t mode_cap) {
  return std::make_shared<const Grid>(dim, points, length, mode_cap);
}

RealField::RealField(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid->size()) throw std::invalid_argument("real field size does not match grid");
}

SpectralField::SpectralField(GridPtr g, std::vector<Complex> c) : grid(std::move(g)), coeffs(std::move(c)) {
  if (coeffs.size() != grid->size()) throw std::invalid_argument("spectral field size does not match grid");
}

SpectralField forward_transform(const RealField& f) {
  const Grid& g = *f.grid;
  if (f.values.size() != g.size()) throw std::invalid_argument("forward_transform: size mismatch");
  FftPlan& plan = plan_for(g);
  Complex* buf = plan.data();
  for (std::size_t i = 0; i < g.size(); ++i) buf[i] = Complex{f.values[i], 0.0};
  plan.forward();
  SpectralField out(f.grid);
  const double w = g.cell_volume();
  for (std::size_t i = 0; i < g.size(); ++i) out.coeffs[i] = buf[i] * w;
  return out;
}

RealField inverse_transform(const SpectralField& s) {
  const Grid& g = *s.grid;
  if (s.coeffs.size() != g.size()) throw std::invalid_argument("inverse_transform: size mismatch");
  FftPlan& plan = plan_for(g);
  Complex* buf = plan.data();
  std::copy(s.coeffs.begin(), s.coeffs.end(), buf);
  plan.backward();
  RealField out(s.grid);
  // u(x_j) = (1/L^n) sum_k u_hat_k e^{i xi_k x_j}
  const double w = 1.0 / std::pow(g.length(), g.dim());
  for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = buf[i].real() * w;
  return out;
}

double hermitian_defect(const SpectralField& s) {
  const Grid& g = *s.grid;
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    worst = std::max(worst, std::abs(s.coeffs[i] - std::conj(s.coeffs[g.negated(i)])));
  }
  return worst;
}

void apply_multiplier_inplace(SpectralField& s, const MultiplierSpec& m) {
  const Grid& g = *s.grid;
  const auto xi2 = g.xi_squared();
  using Kind = MultiplierSpec::Kind;
  switch (m.kind) {
    case Kind::partial_derivative: {
      if (m.axis < 0 || m.axis >= g.dim()) throw std::invalid_argument("derivative axis out of range");
      for (std::size_t i = 0; i < g.size(); ++i) {
        const int k = g.axis_index(i, m.axis);
        const double xi = g.is_nyquist(k) ? 0.0 : g.wavenumber(k);
        s.coeffs[i] *= Complex{0.0, xi};
      }
      break;
    }
    case Kind::laplacian:
      for (std::size_t i = 0; i < g.size(); ++i) s.coeffs[i] *= -xi2[i];
      break;
    case Kind::inv_helmholtz:
      for (std::size_t i = 0; i < g.size(); ++i) s.coeffs[i] /= 1.0 + xi2[i];
      break;
    case Kind::riesz_power: {
      if (m.power < 0.0 && m.zero_mode != ZeroModePolicy::annihilate)
        throw std::invalid_argument("negative Riesz power requires the zero mode to be annihilated");
      const double half = 0.5 * m.power;
      for (std::size_t i = 1; i < g.size(); ++i) s.coeffs[i] *= std::pow(xi2[i], half);
      if (m.zero_mode == ZeroModePolicy::annihilate || m.power > 0.0) {
        s.coeffs[0] = Complex{};
      }
      break;
    }
  }
}

SpectralField apply_multiplier(const SpectralField& g, const MultiplierSpec& m) {
  SpectralField out = g;
  apply_multiplier_inplace(out, m);
  return out;
}

int dealias_cutoff(int points, double rule) {
  if (!(rule > 0.0) || rule > 1.0) throw std::invalid_argument("dealias rule must lie in (0, 1]");
  return static_cast<int>(std::floor(rule * (points / 2) + 1e-9));
}

void dealias_inplace(SpectralField& s, double rule) {
  const Grid& g = *s.grid;
  const int kmax = dealias_cutoff(g.points(), rule);
  if (kmax >= g.points() / 2) return;
  const auto top = g.max_abs_index();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (top[i] > static_cast<std::uint32_t>(kmax)) s.coeffs[i] = Complex{};
  }
}

SpectralField dealias(const SpectralField& g, double rule) {
  SpectralField out = g;
  dealias_inplace(out, rule);
  return out;
}

}  // namespace radgas
