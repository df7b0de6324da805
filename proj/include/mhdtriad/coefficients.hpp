#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "mhdtriad/eigensystem.hpp"
#include "mhdtriad/eos.hpp"

namespace mhdtriad {

/// Two groupings of the self-interaction coefficient circulate for this triad:
///   WeightedSum:    E_f = (G0 gamma_s + 3/2 gamma_f) c_f
///   FactoredGammaF: E_f = (G0 gamma_s + 3/2) c_f gamma_f
/// Only WeightedSum agrees with the contraction L . (grad A . R) R (see validated_ef_variant).
enum class EfVariant { WeightedSum, FactoredGammaF };

inline constexpr EfVariant kDefaultEfVariant = EfVariant::WeightedSum;

std::string_view to_string(EfVariant v);
std::optional<EfVariant> parse_ef_variant(std::string_view s);

/// Transport coefficients of the fast-magnetosonic / entropy triad.
struct TriadCoefficients {
  double c0 = 0.0, ca = 0.0, cs = 0.0, cf = 0.0;
  double G0 = 0.0;       ///< 1 + rho0 c_rho / c0
  double H0 = 0.0;       ///< rho0 P_rho_s / (2 P_s)
  double gamma_f = 0.0;  ///< (cf^2 - c0^2) / (cf^2 - cs^2)
  double gamma_s = 0.0;  ///< (cs^2 - c0^2) / (cs^2 - cf^2)
  double cp0 = 0.0;
  double E_f = 0.0;
  double M_f = 0.0;
  double Lambda_f = 0.0;
  double Omega_f = 0.0;
  double Omega_e = 0.0;
  EfVariant variant = kDefaultEfVariant;
};

/// Closed-form coefficients. Works for B02 = 0 (gamma_f = 0) but throws
/// DegenerateBackground when cf = cs or cf = ca.
TriadCoefficients triad_coefficients(const BackgroundState& bg, EfVariant variant = kDefaultEfVariant);

/// Breakdown time 1 / (A E_f) of the dispersionless equation with data A cos x.
double breakdown_time(double amplitude, double E_f);

/// Entropy wave (k1, omega1) and the left (k6, omega6) / right (k7, omega7) fast waves
/// with k1 + k6 + k7 = 0 and omega1 + omega6 + omega7 = 0.
struct ResonantTriad {
  double k1 = 0.0, k6 = 0.0, k7 = 0.0;
  double omega1 = 0.0, omega6 = 0.0, omega7 = 0.0;

  /// Wavenumbers indexed by Wave, zero for families outside the triad.
  std::array<double, 7> wavenumbers() const;
};

ResonantTriad resonant_triad(int k7, const WaveSpeeds& speeds);

/// grad_A[k] = dA/dU_k at the background.
using GradA = std::array<Matrix7, 7>;

/// Centered finite differences of assemble_A around U0 with step h (error O(h^2)).
GradA grad_A_fd(const BackgroundState& bg, double h = 1e-5);

/// L . (grad A . a) b = sum_k a_k L . (dA/dU_k) b
double contract(const GradA& gradA, const Eigen::Matrix<double, 1, 7>& L, const Vector7& a, const Vector7& b);

/// Hall dispersion block: only the B2/B3 cross-coupling is populated.
Matrix7 dispersion_matrix(const BackgroundState& bg);

/// Viscous, resistive and thermal-conduction part of the second-order operator at U0.
Matrix7 diffusion_matrix(const BackgroundState& bg);

using Tensor3 = std::array<std::array<std::array<double, 7>, 7>, 7>;

/// Per-wave coefficients of the seven-wave amplitude system, evaluated on a triad.
/// Entries of mu and Gamma are NaN where the kinematic ratio is undefined
/// (k_n = 0 or lambda_n = lambda_m).
struct GeneralCoefficients {
  std::array<double, 7> E{};
  std::array<double, 7> Omega{};
  std::array<double, 7> Lambda{};
  std::array<Vector7, 7> P{};
  Tensor3 mu{};
  Tensor3 Gamma{};
};

struct ContractionOptions {
  double fd_step = 1e-5;
  double solvability_tol = 1e-10;
};

GeneralCoefficients general_coefficients(const BackgroundState& bg, const ResonantTriad& triad,
                                         const ContractionOptions& opts = {});

/// Which closed-form E_f grouping reproduces the contraction engine within rel_tol
/// at this background, if any.
std::optional<EfVariant> validated_ef_variant(const BackgroundState& bg, double rel_tol = 1e-6);

}  // namespace mhdtriad
