#pragma once

#include <Eigen/Dense>

namespace mhdtriad {

using Vector7 = Eigen::Matrix<double, 7, 1>;
using Matrix7 = Eigen::Matrix<double, 7, 7>;

/// Slot order of the MHD state U = (rho, u, v, w, s, B2, B3).
enum Slot : int { kRho = 0, kU = 1, kV = 2, kW = 3, kS = 4, kB2 = 5, kB3 = 6 };

/// van der Waals gas P = K0 delta rho^(1+delta) exp(delta s / R) / (1 - b rho)^(1+delta).
///
/// Everything is dimensionless: K0 is not a free input but is fixed so that the
/// background has unit pressure, P(rho0, s0) = 1.
struct EosParams {
  double delta = 0.04;  ///< R / c_v, in (0, 2/3]
  double b = 0.0;       ///< excluded volume, 0 <= b*rho0 < 1
  double R = 1.0;
  double K0 = 0.0;

  /// Build parameters normalized to P(rho0, s0) = 1. Throws DomainError outside the admissible range.
  static EosParams normalized(double delta, double b, double rho0 = 1.0, double s0 = 0.0);

  double cv() const { return R / delta; }
  /// For this equation of state c_p - c_v = R exactly, independent of the covolume.
  double cp() const { return R * (1.0 + delta) / delta; }
};

struct StateVector {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double s = 0.0;
  double B2 = 0.0;
  double B3 = 0.0;

  Vector7 to_vector() const;
  static StateVector from_vector(const Vector7& U);
};

/// Constant upstream state U0 = (rho0, 0, 0, 0, s0, B02, 0) with the field and
/// order-one transport parameters of the scaled problem.
struct BackgroundState {
  double rho0 = 1.0;
  double s0 = 0.0;
  double B01 = 0.1;
  double B02 = 1.0;
  double chi_hat = 1.0;
  double mu_hat = 0.0;
  double eta_hat = 0.0;
  double kappa_hat = 0.0;
  EosParams eos;

  static BackgroundState make(double delta, double b, double B01, double B02, double chi_hat = 1.0);

  StateVector state() const;
  void validate() const;
};

// Thermodynamics. All functions throw DomainError when 1 - b rho <= 0 or rho <= 0.
double pressure(const StateVector& U, const EosParams& eos);
double temperature(const StateVector& U, const EosParams& eos);
double pressure_rho(const StateVector& U, const EosParams& eos);
double pressure_s(const StateVector& U, const EosParams& eos);
double pressure_rho_s(const StateVector& U, const EosParams& eos);
double pressure_rho_rho(const StateVector& U, const EosParams& eos);
double temperature_rho(const StateVector& U, const EosParams& eos);
double temperature_s(const StateVector& U, const EosParams& eos);

/// Background sound speed sqrt((1 + delta) / (1 - b)) of the normalized gas (rho0 = P0 = 1).
double sound_speed0(const EosParams& eos);

/// Sound speed sqrt(P_rho) at an arbitrary state.
double sound_speed(const StateVector& U, const EosParams& eos);

/// Convective matrix A(U) of U_t + A(U) U_x = ...; B1 is the constant longitudinal field.
Matrix7 assemble_A(const StateVector& U, const EosParams& eos, double B1);

}  // namespace mhdtriad
