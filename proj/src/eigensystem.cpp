#include "mhdtriad/eigensystem.hpp"

#include <algorithm>
#include <cmath>

#include "mhdtriad/errors.hpp"

namespace mhdtriad {

std::string_view to_string(HyperbolicityClass c) {
  switch (c) {
    case HyperbolicityClass::StrictlyHyperbolic: return "StrictlyHyperbolic";
    case HyperbolicityClass::DegenerateB01Zero: return "DegenerateB01Zero";
    case HyperbolicityClass::DegenerateB02ZeroTriple: return "DegenerateB02ZeroTriple";
    case HyperbolicityClass::DegenerateB02ZeroDouble: return "DegenerateB02ZeroDouble";
  }
  return "unknown";
}

bool speeds_coincide(double a, double b) { return std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)); }

WaveSpeeds wave_speeds(const BackgroundState& bg) {
  bg.validate();
  const StateVector U0 = bg.state();
  WaveSpeeds ws;
  const double c02 = pressure_rho(U0, bg.eos);
  ws.c0 = std::sqrt(c02);
  ws.ca = std::abs(bg.B01) / std::sqrt(bg.rho0);

  // c^4 - sum c^2 + product = 0 with sum = c0^2 + |B|^2/rho0, product = c0^2 B01^2/rho0.
  const double sum = c02 + (bg.B01 * bg.B01 + bg.B02 * bg.B02) / bg.rho0;
  const double product = c02 * bg.B01 * bg.B01 / bg.rho0;
  // sum^2 - 4 product regrouped so the B02 = 0, ca = c0 double root stays exact.
  const double ca2 = ws.ca * ws.ca;
  const double bt2 = bg.B02 * bg.B02 / bg.rho0;
  const double disc = std::sqrt((c02 - ca2) * (c02 - ca2) + bt2 * (2.0 * (c02 + ca2) + bt2));
  const double cf2 = 0.5 * (sum + disc);
  // Vieta for the small root avoids cancellation when B01 is small.
  const double cs2 = cf2 > 0.0 ? product / cf2 : 0.0;
  ws.cf = std::sqrt(cf2);
  ws.cs = std::sqrt(std::max(0.0, cs2));

  ws.lambdas = {0.0, -ws.ca, ws.ca, -ws.cs, ws.cs, -ws.cf, ws.cf};
  return ws;
}

HyperbolicityClass classify(const BackgroundState& bg) {
  if (bg.B01 == 0.0) return HyperbolicityClass::DegenerateB01Zero;
  if (bg.B02 == 0.0) {
    const WaveSpeeds ws = wave_speeds(bg);
    return speeds_coincide(ws.ca, ws.c0) ? HyperbolicityClass::DegenerateB02ZeroTriple
                                         : HyperbolicityClass::DegenerateB02ZeroDouble;
  }
  return HyperbolicityClass::StrictlyHyperbolic;
}

EigenPairs eigen_pairs(const BackgroundState& bg) {
  const HyperbolicityClass cls = classify(bg);
  if (cls != HyperbolicityClass::StrictlyHyperbolic)
    throw DegenerateBackground("eigenvector basis not unique: " + std::string(to_string(cls)));

  const WaveSpeeds ws = wave_speeds(bg);
  const auto& lam = ws.lambdas;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (speeds_coincide(lam[i], lam[j]))
        throw DegenerateBackground("characteristic speeds " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " coincide");

  const StateVector U0 = bg.state();
  const double rho0 = bg.rho0;
  const double B01 = bg.B01;
  const double B02 = bg.B02;
  const double ca2 = ws.ca * ws.ca;

  EigenPairs ep;
  ep.right.setZero();

  // Entropy wave: the s-slot balances the pressure perturbation, P_rho drho + P_s ds = 0.
  ep.right(kRho, kEntropy) = rho0;
  ep.right(kS, kEntropy) = -rho0 * pressure_rho(U0, bg.eos) / pressure_s(U0, bg.eos);

  for (int i : {kAlfvenLeft, kAlfvenRight}) {
    ep.right(kW, i) = lam[i];
    ep.right(kB3, i) = -B01;
  }

  // Magnetosonic waves: (rho0, lambda, -lambda B01 B02 / (rho0 (c^2 - ca^2)), 0, 0, B02 c^2/(c^2 - ca^2), 0).
  for (int i : {kSlowLeft, kSlowRight, kFastLeft, kFastRight}) {
    const double c2 = lam[i] * lam[i];
    const double denom = c2 - ca2;
    ep.right(kRho, i) = rho0;
    ep.right(kU, i) = lam[i];
    ep.right(kV, i) = -lam[i] * B01 * B02 / (rho0 * denom);
    ep.right(kB2, i) = B02 * c2 / denom;
  }

  Eigen::FullPivLU<Matrix7> lu(ep.right);
  if (!lu.isInvertible()) throw DegenerateBackground("right eigenvectors are linearly dependent");
  ep.left = lu.inverse();
  return ep;
}

}  // namespace mhdtriad
