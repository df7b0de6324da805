#include "mhdtriad/eos.hpp"

#include <cmath>
#include <string>

#include "mhdtriad/errors.hpp"

namespace mhdtriad {

namespace {

void check_state(const StateVector& U, const EosParams& eos) {
  if (!(U.rho > 0.0)) throw DomainError("density must be positive, got " + std::to_string(U.rho));
  if (!(1.0 - eos.b * U.rho > 0.0))
    throw DomainError("covolume exhausted: 1 - b*rho = " + std::to_string(1.0 - eos.b * U.rho));
}

void check_params(double delta, double b) {
  if (!(delta > 0.0 && delta <= 2.0 / 3.0))
    throw DomainError("delta must lie in (0, 2/3], got " + std::to_string(delta));
  if (!(b >= 0.0 && b < 1.0)) throw DomainError("b must lie in [0, 1), got " + std::to_string(b));
}

}  // namespace

EosParams EosParams::normalized(double delta, double b, double rho0, double s0) {
  check_params(delta, b);
  if (!(rho0 > 0.0) || !(1.0 - b * rho0 > 0.0)) throw DomainError("inadmissible background density");
  EosParams p;
  p.delta = delta;
  p.b = b;
  p.R = 1.0;
  const double shape = std::pow(rho0, 1.0 + delta) * std::exp(delta * s0 / p.R) /
                       std::pow(1.0 - b * rho0, 1.0 + delta);
  p.K0 = 1.0 / (delta * shape);
  return p;
}

Vector7 StateVector::to_vector() const {
  Vector7 U;
  U << rho, u, v, w, s, B2, B3;
  return U;
}

StateVector StateVector::from_vector(const Vector7& U) {
  return {U[kRho], U[kU], U[kV], U[kW], U[kS], U[kB2], U[kB3]};
}

BackgroundState BackgroundState::make(double delta, double b, double B01, double B02, double chi_hat) {
  BackgroundState bg;
  bg.B01 = B01;
  bg.B02 = B02;
  bg.chi_hat = chi_hat;
  bg.eos = EosParams::normalized(delta, b, bg.rho0, bg.s0);
  return bg;
}

StateVector BackgroundState::state() const {
  StateVector U;
  U.rho = rho0;
  U.s = s0;
  U.B2 = B02;
  return U;
}

void BackgroundState::validate() const {
  check_params(eos.delta, eos.b);
  check_state(state(), eos);
  if (!(eos.K0 > 0.0)) throw DomainError("EOS constant not initialized; use EosParams::normalized");
}

double pressure(const StateVector& U, const EosParams& eos) {
  check_state(U, eos);
  const double d = eos.delta;
  return eos.K0 * d * std::pow(U.rho, 1.0 + d) * std::exp(d * U.s / eos.R) /
         std::pow(1.0 - eos.b * U.rho, 1.0 + d);
}

double temperature(const StateVector& U, const EosParams& eos) {
  // P = R rho T / (1 - b rho)
  return pressure(U, eos) * (1.0 - eos.b * U.rho) / (eos.R * U.rho);
}

double pressure_rho(const StateVector& U, const EosParams& eos) {
  return (1.0 + eos.delta) * pressure(U, eos) / (U.rho * (1.0 - eos.b * U.rho));
}

double pressure_s(const StateVector& U, const EosParams& eos) {
  return eos.delta * pressure(U, eos) / eos.R;
}

double pressure_rho_s(const StateVector& U, const EosParams& eos) {
  return eos.delta * pressure_rho(U, eos) / eos.R;
}

double pressure_rho_rho(const StateVector& U, const EosParams& eos) {
  const double x = 1.0 - eos.b * U.rho;
  return pressure_rho(U, eos) * (eos.delta + 2.0 * eos.b * U.rho) / (U.rho * x);
}

double temperature_rho(const StateVector& U, const EosParams& eos) {
  return eos.delta * temperature(U, eos) / (U.rho * (1.0 - eos.b * U.rho));
}

double temperature_s(const StateVector& U, const EosParams& eos) {
  return eos.delta * temperature(U, eos) / eos.R;
}

double sound_speed0(const EosParams& eos) {
  if (!(eos.b >= 0.0 && eos.b < 1.0)) throw DomainError("b must lie in [0, 1), got " + std::to_string(eos.b));
  return std::sqrt((eos.delta + 1.0) / (1.0 - eos.b));
}

double sound_speed(const StateVector& U, const EosParams& eos) { return std::sqrt(pressure_rho(U, eos)); }

Matrix7 assemble_A(const StateVector& U, const EosParams& eos, double B1) {
  const double rho = U.rho;
  const double P_rho = pressure_rho(U, eos);
  const double P_s = pressure_s(U, eos);

  Matrix7 A = Matrix7::Zero();
  for (int i = 0; i < 7; ++i) A(i, i) = U.u;
  A(kRho, kU) = rho;
  A(kU, kRho) = P_rho / rho;
  A(kU, kS) = P_s / rho;
  // Magnetic pressure gradient (B2 B2_x + B3 B3_x) / rho.
  A(kU, kB2) = U.B2 / rho;
  A(kU, kB3) = U.B3 / rho;
  A(kV, kB2) = -B1 / rho;
  A(kW, kB3) = -B1 / rho;
  A(kB2, kU) = U.B2;
  A(kB2, kV) = -B1;
  A(kB3, kU) = U.B3;
  A(kB3, kW) = -B1;
  return A;
}

}  // namespace mhdtriad
