#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace mhdtriad {

using Complex = std::complex<double>;
/// Half spectrum m = 0 .. n/2 of a real field, normalized so that
/// f(x) = sum over all m of f_m e^{i m x}.
using Spectrum = std::vector<Complex>;

/// Uniform grid x_j = 2 pi j / n on [0, 2 pi). n must be a power of two, n >= 16.
class Grid {
 public:
  explicit Grid(int n);

  int n() const { return n_; }
  int modes() const { return n_ / 2 + 1; }
  /// Highest wavenumber kept by the two-thirds rule.
  int cutoff() const { return n_ / 3; }
  double x(int j) const;
  double dx() const;
  std::vector<double> nodes() const;

  bool operator==(const Grid&) const = default;

 private:
  int n_;
};

/// Real-to-complex transforms of one size, backed by FFTW plans created once
/// and shared. execute calls are safe from several threads.
class FourierTransform {
 public:
  static std::shared_ptr<const FourierTransform> get(int n);

  explicit FourierTransform(int n);
  ~FourierTransform();
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  int n() const { return n_; }
  /// values (n) -> normalized half spectrum (n/2 + 1)
  void forward(std::span<const double> values, std::span<Complex> modes) const;
  /// normalized half spectrum -> values; the input is not modified
  void inverse(std::span<const Complex> modes, std::span<double> values) const;

 private:
  int n_;
  void* r2c_;
  void* c2r_;
};

/// One real periodic profile with its Fourier coefficients kept in step.
class SpectralField {
 public:
  static SpectralField from_values(const Grid& grid, std::vector<double> values);
  static SpectralField from_modes(const Grid& grid, Spectrum modes);
  static SpectralField from_function(const Grid& grid, const std::function<double(double)>& f);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const Spectrum& modes() const { return modes_; }

  /// d/dx computed in Fourier space (Nyquist mode dropped).
  SpectralField derivative(int order = 1) const;

 private:
  SpectralField(const Grid& grid, std::vector<double> values, Spectrum modes);

  Grid grid_;
  std::vector<double> values_;
  Spectrum modes_;
};

/// Fourier coefficients of a convolution kernel K(x).
struct Kernel {
  Spectrum modes;
  /// K(-x) = -K(x), i.e. all coefficients purely imaginary.
  bool odd = false;

  static Kernel from_function(const Grid& grid, const std::function<double(double)>& K);
  static Kernel sine(const Grid& grid);
  static Kernel cosine(const Grid& grid);
  /// K = k1 d(sigma1)/dtheta from an entropy-wave profile frozen in time.
  static Kernel from_entropy_amplitude(const SpectralField& sigma1, double k1);
};

enum class ConvolutionOrientation {
  ForwardShift,   ///< (1/2pi) int K(y - x) f(y) dy, coefficients f_m K_{-m}
  BackwardShift,  ///< (1/2pi) int K(x - y) f(y) dy, coefficients f_m K_m
};

SpectralField convolve(const Kernel& kernel, const SpectralField& field, ConvolutionOrientation orientation);

}  // namespace mhdtriad
