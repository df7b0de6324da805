#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mhdtriad/coefficients.hpp"
#include "mhdtriad/diagnostics.hpp"
#include "mhdtriad/spectral.hpp"

namespace mhdtriad {

/// RK4 stability interval on the imaginary axis is 2*sqrt(2) ~ 2.83.
inline constexpr double kStabilityConstant = 2.8;

enum class SolveMode { Single, Pair };

struct SolverConfig {
  TriadCoefficients coefficients;
  double dt = 1e-4;
  double t_end = 1.0;
  Grid grid{512};
  Kernel kernel;
  double initial_amplitude = 1.0;
  /// Replaces A cos x when set.
  std::function<double(double)> initial_profile;
  int record_stride = 10;
  /// Adds Omega_f alpha_xx; off for the inviscid experiments.
  bool viscous = false;
  std::vector<double> snapshot_times;
  double min_prominence = kDefaultMinProminence;

  /// Default kernel K = sin x on the given grid.
  static SolverConfig make(const TriadCoefficients& coefficients, int n, double dt, double t_end);

  SpectralField initial_field() const;
  /// c_stab / (Lambda k^3 + |E| g max|alpha0| k + Omega k^2 + M max|K_m|) with k the
  /// dealiasing cutoff and g an allowance for amplitude growth.
  double stable_dt(double amplitude_growth = 1.0) const;
  /// Throws ValidationError when dt, t_end, the stride or the kernel are unusable.
  void validate() const;
};

/// -E alpha alpha_x - M conv(K, alpha) - Lambda alpha_xxx (+ Omega alpha_xx), dealiased.
SpectralField rhs_single(const SpectralField& field, const SolverConfig& cfg);

/// Right-hand sides of the coupled pair; the interaction terms carry opposite
/// signs and opposite kernel orientations.
std::pair<SpectralField, SpectralField> rhs_pair(const SpectralField& f1, const SpectralField& f2,
                                                 const SolverConfig& cfg);

struct PairState {
  SpectralField first;
  SpectralField second;
};

/// One classical RK4 step of size cfg.dt (or dt when given). Throws BlowUp on non-finite output.
SpectralField step_rk4(const SpectralField& state, const SolverConfig& cfg, std::optional<double> dt = {});
PairState step_rk4(const PairState& state, const SolverConfig& cfg, std::optional<double> dt = {});

struct Snapshot {
  double t = 0.0;
  std::vector<double> values;
  std::vector<double> values2;  ///< second amplitude in Pair mode
};

struct RunResult {
  RunRecord record;
  std::vector<Snapshot> snapshots;
  /// max|alpha1 - alpha2| aligned with record.times (Pair mode only).
  std::vector<double> pair_asymmetry;
  SpectralField final_field;
  std::optional<SpectralField> final_second;
};

/// Integrates to cfg.t_end, landing exactly on every snapshot time.
RunResult simulate(const SolverConfig& cfg, SolveMode mode = SolveMode::Single);

}  // namespace mhdtriad
