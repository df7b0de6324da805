#pragma once

#include <optional>
#include <vector>

#include "mhdtriad/spectral.hpp"

namespace mhdtriad {

inline constexpr double kDefaultBreakdownFactor = 25.0;
inline constexpr double kDefaultMinProminence = 0.1;

struct Sample {
  double min = 0.0;
  double max = 0.0;
  double max_abs_gradient = 0.0;
  double mean = 0.0;
  double l2_norm = 0.0;  ///< sqrt((1/2pi) int alpha^2 dx)
  int soliton_count = 0;
};

struct RunRecord {
  std::vector<double> times;
  std::vector<Sample> series;
  double t_b_analytic = 0.0;
  std::optional<double> t_b_numeric;

  void append(double t, const Sample& s);
};

Sample sample_field(const SpectralField& field, double min_prominence = kDefaultMinProminence);

struct SolitonCensus {
  int count = 0;
  std::vector<double> positions;   ///< crest x, sorted, in [0, 2 pi)
  std::vector<double> amplitudes;  ///< crest heights
  std::vector<double> widths;      ///< full width at half prominence
  std::vector<double> prominences;

  double median_width() const;
  double max_amplitude() const;
};

/// Local maxima whose prominence (height above the higher of the two flanking
/// minima on the periodic grid) exceeds min_prominence * (max - min).
SolitonCensus count_solitons(const SpectralField& field, double min_prominence = kDefaultMinProminence);

/// Root of alpha = A cos(x - E_f alpha t) on the branch that is unique while
/// t A E_f < 1. Throws NoConvergence at or past breakdown.
double characteristic_oracle(double A, double E_f, double t, double x, double tol = 1e-14);

/// First time max|alpha_x| exceeds threshold_factor times its initial value,
/// linearly interpolated between samples. Throws NotReached.
double detect_breakdown(const RunRecord& record, double threshold_factor = kDefaultBreakdownFactor);

struct AuditReport {
  double mean_drift = 0.0;  ///< max |mean(t) - mean(0)|
  double l2_drift = 0.0;    ///< max |l2(t) / l2(0) - 1|
  bool l2_flagged = false;  ///< l2_drift above the inviscid odd-kernel tolerance
  double l2_tolerance = 1e-8;
};

AuditReport conserved_audit(const RunRecord& record, double l2_tolerance = 1e-8);

}  // namespace mhdtriad
