#include "mhdtriad/coefficients.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mhdtriad/errors.hpp"

namespace mhdtriad {

std::string_view to_string(EfVariant v) {
  return v == EfVariant::WeightedSum ? "weighted_sum" : "factored_gamma_f";
}

std::optional<EfVariant> parse_ef_variant(std::string_view s) {
  if (s == "weighted_sum") return EfVariant::WeightedSum;
  if (s == "factored_gamma_f") return EfVariant::FactoredGammaF;
  return std::nullopt;
}

TriadCoefficients triad_coefficients(const BackgroundState& bg, EfVariant variant) {
  const WaveSpeeds ws = wave_speeds(bg);
  if (speeds_coincide(ws.cf, ws.cs)) throw DegenerateBackground("cf = cs: magnetosonic weights undefined");
  if (speeds_coincide(ws.cf, ws.ca)) throw DegenerateBackground("cf = ca: dispersion coefficient singular");

  const StateVector U0 = bg.state();
  const double rho0 = bg.rho0;
  const double c02 = ws.c0 * ws.c0;
  const double cf2 = ws.cf * ws.cf;
  const double cs2 = ws.cs * ws.cs;
  const double ca2 = ws.ca * ws.ca;

  TriadCoefficients tc;
  tc.c0 = ws.c0;
  tc.ca = ws.ca;
  tc.cs = ws.cs;
  tc.cf = ws.cf;
  // c_rho = P_rho_rho / (2 c), so rho c_rho / c = rho P_rho_rho / (2 c^2).
  tc.G0 = 1.0 + rho0 * pressure_rho_rho(U0, bg.eos) / (2.0 * c02);
  tc.H0 = 0.5 * rho0 * pressure_rho_s(U0, bg.eos) / pressure_s(U0, bg.eos);
  tc.gamma_f = (cf2 - c02) / (cf2 - cs2);
  tc.gamma_s = (cs2 - c02) / (cs2 - cf2);
  tc.cp0 = bg.eos.cp();
  tc.variant = variant;

  if (variant == EfVariant::WeightedSum)
    tc.E_f = (tc.G0 * tc.gamma_s + 1.5 * tc.gamma_f) * ws.cf;
  else
    tc.E_f = (tc.G0 * tc.gamma_s + 1.5) * ws.cf * tc.gamma_f;

  tc.M_f = ((tc.G0 - tc.H0) * tc.gamma_s + 0.5 * tc.gamma_f) * ws.cf;
  tc.Lambda_f = (ca2 / (cf2 - ca2)) * rho0 * tc.gamma_f * ws.cf * bg.chi_hat * bg.chi_hat;

  // The viscous term is dropped at cs = 0 (B01 = 0 has no slow wave to damp).
  const double slow_visc = cs2 > 0.0 ? 4.0 * tc.gamma_s / (3.0 * cs2) : 0.0;
  tc.Omega_f = ca2 / (2.0 * rho0) * (slow_visc + tc.gamma_f / cf2) * bg.mu_hat + 0.5 * tc.gamma_f * bg.eta_hat +
               tc.gamma_s * bg.eos.delta / (2.0 * rho0 * tc.cp0) * bg.kappa_hat;
  tc.Omega_e = bg.kappa_hat / (rho0 * tc.cp0);
  return tc;
}

double breakdown_time(double amplitude, double E_f) {
  if (!(amplitude > 0.0)) throw DomainError("breakdown time needs a positive amplitude");
  if (!(E_f > 0.0)) throw DomainError("breakdown time needs a positive nonlinearity coefficient");
  return 1.0 / (amplitude * E_f);
}

std::array<double, 7> ResonantTriad::wavenumbers() const {
  std::array<double, 7> k{};
  k[kEntropy] = k1;
  k[kFastLeft] = k6;
  k[kFastRight] = k7;
  return k;
}

ResonantTriad resonant_triad(int k7, const WaveSpeeds& speeds) {
  if (k7 == 0) throw DomainError("resonant triad needs a nonzero wavenumber");
  ResonantTriad t;
  t.k7 = k7;
  t.k6 = k7;
  t.k1 = -2.0 * k7;
  t.omega1 = speeds.lambdas[kEntropy] * t.k1;
  t.omega6 = speeds.lambdas[kFastLeft] * t.k6;
  t.omega7 = speeds.lambdas[kFastRight] * t.k7;
  return t;
}

GradA grad_A_fd(const BackgroundState& bg, double h) {
  bg.validate();
  const Vector7 U0 = bg.state().to_vector();
  GradA g;
  for (int k = 0; k < 7; ++k) {
    Vector7 up = U0, dn = U0;
    up[k] += h;
    dn[k] -= h;
    try {
      g[k] = (assemble_A(StateVector::from_vector(up), bg.eos, bg.B01) -
              assemble_A(StateVector::from_vector(dn), bg.eos, bg.B01)) /
             (2.0 * h);
    } catch (const DomainError& e) {
      throw DomainError("finite-difference probe left the admissible region in slot " + std::to_string(k) +
                        ": " + e.what());
    }
  }
  return g;
}

double contract(const GradA& gradA, const Eigen::Matrix<double, 1, 7>& L, const Vector7& a, const Vector7& b) {
  Matrix7 dA = Matrix7::Zero();
  for (int k = 0; k < 7; ++k) dA += a[k] * gradA[k];
  return L * dA * b;
}

Matrix7 dispersion_matrix(const BackgroundState& bg) {
  Matrix7 M = Matrix7::Zero();
  M(kB2, kB3) = -bg.chi_hat * bg.B01;
  M(kB3, kB2) = bg.chi_hat * bg.B01;
  return M;
}

Matrix7 diffusion_matrix(const BackgroundState& bg) {
  const StateVector U0 = bg.state();
  const double rho = bg.rho0;
  const double T = temperature(U0, bg.eos);
  Matrix7 M = Matrix7::Zero();
  M(kU, kU) = 4.0 / 3.0 * bg.mu_hat / rho;
  M(kV, kV) = bg.mu_hat / rho;
  M(kW, kW) = bg.mu_hat / rho;
  // s_t = kappa T_xx / (rho T) at leading order, T_xx = T_rho rho_xx + T_s s_xx.
  M(kS, kRho) = bg.kappa_hat * temperature_rho(U0, bg.eos) / (rho * T);
  M(kS, kS) = bg.kappa_hat * temperature_s(U0, bg.eos) / (rho * T);
  M(kB2, kB2) = bg.eta_hat;
  M(kB3, kB3) = bg.eta_hat;
  return M;
}

GeneralCoefficients general_coefficients(const BackgroundState& bg, const ResonantTriad& triad,
                                         const ContractionOptions& opts) {
  const EigenPairs ep = eigen_pairs(bg);
  const WaveSpeeds ws = wave_speeds(bg);
  const GradA gradA = grad_A_fd(bg, opts.fd_step);
  const Matrix7 A0 = assemble_A(bg.state(), bg.eos, bg.B01);
  const Matrix7 Md = dispersion_matrix(bg);
  const Matrix7 Mv = diffusion_matrix(bg);
  const auto k = triad.wavenumbers();
  const auto& lam = ws.lambdas;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  GeneralCoefficients gc;
  for (auto& plane : gc.mu)
    for (auto& row : plane) row.fill(nan);
  gc.Gamma = gc.mu;

  for (int j = 0; j < 7; ++j) {
    const Vector7 Rj = ep.R(j);
    const auto Lj = ep.L(j);
    gc.E[j] = k[j] * contract(gradA, Lj, Rj, Rj);
    gc.Omega[j] = k[j] * k[j] * (Lj * Mv * Rj)(0, 0);
    gc.P[j].setZero();
    gc.Lambda[j] = 0.0;
    if (k[j] == 0.0) continue;

    const Vector7 rhs = k[j] * k[j] * Md * Rj;
    const double solvability = Lj * Md * Rj;
    if (std::abs(solvability) > opts.solvability_tol * std::max(1.0, rhs.norm()))
      throw SolvabilityViolation("L_j . M_d R_j = " + std::to_string(solvability) + " for wave " +
                                 std::to_string(j + 1));
    // (k A0 - omega I) is singular along R_j; pin the gauge with L_j . P_j = 0.
    Eigen::Matrix<double, 8, 7> sys;
    sys.topRows<7>() = k[j] * A0 - k[j] * lam[j] * Matrix7::Identity();
    sys.row(7) = Lj;
    Eigen::Matrix<double, 8, 1> b;
    b.head<7>() = rhs;
    b[7] = 0.0;
    gc.P[j] = sys.completeOrthogonalDecomposition().solve(b);
    gc.Lambda[j] = k[j] * k[j] * (Lj * Md * gc.P[j])(0, 0);
  }

  for (int j = 0; j < 7; ++j)
    for (int m = 0; m < 7; ++m)
      for (int n = 0; n < 7; ++n) {
        if (k[n] == 0.0 || speeds_coincide(lam[n], lam[m])) continue;
        gc.mu[j][m][n] = k[j] * (lam[j] - lam[m]) / (k[n] * (lam[n] - lam[m]));
      }

  for (int j = 0; j < 7; ++j)
    for (int m = 0; m < 7; ++m)
      for (int n = 0; n < 7; ++n) {
        if (m == n || j == m || j == n) continue;
        const double mu_mn = gc.mu[j][m][n];
        const double mu_nm = gc.mu[j][n][m];
        if (std::isnan(mu_mn) || std::isnan(mu_nm)) continue;
        gc.Gamma[j][m][n] = mu_mn * k[n] * contract(gradA, ep.L(j), ep.R(m), ep.R(n)) +
                            mu_nm * k[m] * contract(gradA, ep.L(j), ep.R(n), ep.R(m));
      }
  return gc;
}

std::optional<EfVariant> validated_ef_variant(const BackgroundState& bg, double rel_tol) {
  const ResonantTriad triad = resonant_triad(1, wave_speeds(bg));
  const GeneralCoefficients gc = general_coefficients(bg, triad);
  const double engine = gc.E[kFastRight] / triad.k7;
  for (EfVariant v : {EfVariant::WeightedSum, EfVariant::FactoredGammaF}) {
    const double closed = triad_coefficients(bg, v).E_f;
    if (std::abs(engine - closed) <= rel_tol * std::abs(closed)) return v;
  }
  return std::nullopt;
}

}  // namespace mhdtriad
