#include "mhdtriad/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "mhdtriad/errors.hpp"

namespace mhdtriad {

namespace {

// FFTW's planner is not thread-safe; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid::Grid(int n) : n_(n) {
  if (n < 16 || !is_power_of_two(n))
    throw ValidationError("grid size must be a power of two >= 16, got " + std::to_string(n));
}

double Grid::x(int j) const { return 2.0 * std::numbers::pi * j / n_; }
double Grid::dx() const { return 2.0 * std::numbers::pi / n_; }

std::vector<double> Grid::nodes() const {
  std::vector<double> xs(n_);
  for (int j = 0; j < n_; ++j) xs[j] = x(j);
  return xs;
}

std::shared_ptr<const FourierTransform> FourierTransform::get(int n) {
  static std::mutex cache_mutex;
  static std::map<int, std::shared_ptr<const FourierTransform>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const FourierTransform>(n);
  return slot;
}

FourierTransform::FourierTransform(int n) : n_(n) {
  std::vector<double> re(n);
  std::vector<Complex> co(n / 2 + 1);
  auto* cptr = reinterpret_cast<fftw_complex*>(co.data());
  // FFTW_ESTIMATE keeps plan choice, and therefore output bits, reproducible.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard lock(planner_mutex());
  r2c_ = fftw_plan_dft_r2c_1d(n, re.data(), cptr, flags);
  c2r_ = fftw_plan_dft_c2r_1d(n, cptr, re.data(), flags);
}

FourierTransform::~FourierTransform() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(r2c_));
  fftw_destroy_plan(static_cast<fftw_plan>(c2r_));
}

void FourierTransform::forward(std::span<const double> values, std::span<Complex> modes) const {
  if (static_cast<int>(values.size()) != n_ || static_cast<int>(modes.size()) != n_ / 2 + 1)
    throw GridMismatch("forward transform size mismatch");
  // r2c does not modify its input, the const_cast only satisfies the C signature.
  fftw_execute_dft_r2c(static_cast<fftw_plan>(r2c_), const_cast<double*>(values.data()),
                       reinterpret_cast<fftw_complex*>(modes.data()));
  const double scale = 1.0 / n_;
  for (auto& c : modes) c *= scale;
}

void FourierTransform::inverse(std::span<const Complex> modes, std::span<double> values) const {
  if (static_cast<int>(values.size()) != n_ || static_cast<int>(modes.size()) != n_ / 2 + 1)
    throw GridMismatch("inverse transform size mismatch");
  // c2r overwrites its input.
  std::vector<Complex> scratch(modes.begin(), modes.end());
  fftw_execute_dft_c2r(static_cast<fftw_plan>(c2r_), reinterpret_cast<fftw_complex*>(scratch.data()),
                       values.data());
}

SpectralField::SpectralField(const Grid& grid, std::vector<double> values, Spectrum modes)
    : grid_(grid), values_(std::move(values)), modes_(std::move(modes)) {}

SpectralField SpectralField::from_values(const Grid& grid, std::vector<double> values) {
  if (static_cast<int>(values.size()) != grid.n()) throw GridMismatch("sample count does not match grid");
  Spectrum modes(grid.modes());
  FourierTransform::get(grid.n())->forward(values, modes);
  return SpectralField(grid, std::move(values), std::move(modes));
}

SpectralField SpectralField::from_modes(const Grid& grid, Spectrum modes) {
  if (static_cast<int>(modes.size()) != grid.modes()) throw GridMismatch("mode count does not match grid");
  // A real field has real mean and Nyquist coefficients.
  modes.front().imag(0.0);
  modes.back().imag(0.0);
  std::vector<double> values(grid.n());
  FourierTransform::get(grid.n())->inverse(modes, values);
  return SpectralField(grid, std::move(values), std::move(modes));
}

SpectralField SpectralField::from_function(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<double> values(grid.n());
  for (int j = 0; j < grid.n(); ++j) values[j] = f(grid.x(j));
  return from_values(grid, std::move(values));
}

SpectralField SpectralField::derivative(int order) const {
  Spectrum d(modes_);
  const int nyquist = grid_.n() / 2;
  for (int m = 0; m <= nyquist; ++m) {
    Complex factor = 1.0;
    for (int p = 0; p < order; ++p) factor *= Complex(0.0, m);
    d[m] = (m == nyquist && order % 2 == 1) ? Complex(0.0) : d[m] * factor;
  }
  return from_modes(grid_, std::move(d));
}

namespace {

Kernel kernel_from_field(const SpectralField& f) {
  Kernel k;
  k.modes = f.modes();
  double scale = 0.0;
  for (const auto& c : k.modes) scale = std::max(scale, std::abs(c));
  const double tol = 1e-12 * std::max(1.0, scale);
  k.odd = std::all_of(k.modes.begin(), k.modes.end(), [&](const Complex& c) { return std::abs(c.real()) <= tol; });
  return k;
}

}  // namespace

Kernel Kernel::from_function(const Grid& grid, const std::function<double(double)>& K) {
  return kernel_from_field(SpectralField::from_function(grid, K));
}

Kernel Kernel::sine(const Grid& grid) {
  return from_function(grid, [](double x) { return std::sin(x); });
}

Kernel Kernel::cosine(const Grid& grid) {
  return from_function(grid, [](double x) { return std::cos(x); });
}

Kernel Kernel::from_entropy_amplitude(const SpectralField& sigma1, double k1) {
  Spectrum m = sigma1.derivative(1).modes();
  for (auto& c : m) c *= k1;
  return kernel_from_field(SpectralField::from_modes(sigma1.grid(), std::move(m)));
}

SpectralField convolve(const Kernel& kernel, const SpectralField& field, ConvolutionOrientation orientation) {
  if (kernel.modes.size() != field.modes().size()) throw GridMismatch("kernel and field live on different grids");
  Spectrum c(field.modes());
  for (std::size_t m = 0; m < c.size(); ++m) {
    // K real, so K_{-m} = conj(K_m).
    const Complex km = orientation == ConvolutionOrientation::ForwardShift ? std::conj(kernel.modes[m]) : kernel.modes[m];
    c[m] *= km;
  }
  return SpectralField::from_modes(field.grid(), std::move(c));
}

}  // namespace mhdtriad
