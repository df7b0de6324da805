#pragma once

#include <array>
#include <string_view>

#include "mhdtriad/eos.hpp"

namespace mhdtriad {

/// The seven characteristic families, in the order lambda_1 .. lambda_7:
/// entropy, left/right Alfven, left/right slow, left/right fast.
enum Wave : int {
  kEntropy = 0,
  kAlfvenLeft = 1,
  kAlfvenRight = 2,
  kSlowLeft = 3,
  kSlowRight = 4,
  kFastLeft = 5,
  kFastRight = 6,
};

struct WaveSpeeds {
  double c0 = 0.0;
  double ca = 0.0;
  double cs = 0.0;
  double cf = 0.0;
  /// (0, -ca, ca, -cs, cs, -cf, cf)
  std::array<double, 7> lambdas{};
};

/// Right eigenvectors are the columns of `right`; left eigenvectors are the rows
/// of `left`, normalized so that left * right = I.
struct EigenPairs {
  Matrix7 right;
  Matrix7 left;

  Vector7 R(int i) const { return right.col(i); }
  Eigen::Matrix<double, 1, 7> L(int i) const { return left.row(i); }
};

enum class HyperbolicityClass {
  StrictlyHyperbolic,
  DegenerateB01Zero,        // B01 = 0: zero speed of multiplicity five
  DegenerateB02ZeroTriple,  // B01 != 0, B02 = 0, ca = c0: ca = cs = cf
  DegenerateB02ZeroDouble,  // B01 != 0, B02 = 0, ca != c0: ca doubled with cs or cf
};

std::string_view to_string(HyperbolicityClass c);

/// Two speeds are treated as coincident when |a - b| < 1e-12 * max(1, |a|).
bool speeds_coincide(double a, double b);

WaveSpeeds wave_speeds(const BackgroundState& bg);

HyperbolicityClass classify(const BackgroundState& bg);

/// Throws DegenerateBackground unless the background is strictly hyperbolic.
EigenPairs eigen_pairs(const BackgroundState& bg);

}  // namespace mhdtriad
