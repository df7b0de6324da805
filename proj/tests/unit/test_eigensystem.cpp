#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "mhdtriad/eigensystem.hpp"
#include "mhdtriad/errors.hpp"

using namespace mhdtriad;

namespace {

std::array<double, 7> sorted_abs_eigenvalues(const BackgroundState& bg) {
  const Matrix7 A = assemble_A(bg.state(), bg.eos, bg.B01);
  Eigen::EigenSolver<Matrix7> es(A, false);
  std::array<double, 7> v{};
  for (int i = 0; i < 7; ++i) v[i] = std::abs(es.eigenvalues()[i].real());
  std::sort(v.begin(), v.end());
  return v;
}

std::array<double, 7> sorted_abs(const std::array<double, 7>& l) {
  auto v = l;
  for (auto& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("B02 = 0 factorizes the quartic") {
  const auto bg = BackgroundState::make(0.04, 0.02, 0.1, 0.0);
  const auto w = wave_speeds(bg);
  CHECK(w.cf == doctest::Approx(1.03015750727542551).epsilon(1e-14));
  CHECK(w.cs == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(w.ca == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("B01 = 0") {
  const auto bg = BackgroundState::make(0.04, 0.02, 0.0, 1.0);
  const auto w = wave_speeds(bg);
  CHECK(w.cs == 0.0);
  CHECK(w.ca == 0.0);
  CHECK(w.cf == doctest::Approx(std::sqrt(w.c0 * w.c0 + 1.0)).epsilon(1e-14));
  CHECK(classify(bg) == HyperbolicityClass::DegenerateB01Zero);
  CHECK_THROWS_AS(eigen_pairs(bg), DegenerateBackground);
}

TEST_CASE("speeds match a dense eigensolver") {
  const auto bg = BackgroundState::make(0.04, 0.0, 0.1, 1.0);
  const auto w = wave_speeds(bg);
  const auto ref = sorted_abs_eigenvalues(bg);
  const auto got = sorted_abs(w.lambdas);
  for (int i = 0; i < 7; ++i) CHECK(got[i] == doctest::Approx(ref[i]).epsilon(1e-12));
  CHECK(w.cs < w.ca);
  CHECK(w.ca < w.c0);
  CHECK(w.c0 < w.cf);
}

TEST_CASE("eigenvectors") {
  const auto bg = BackgroundState::make(0.04, 0.0, 0.1, 1.0);
  const auto ep = eigen_pairs(bg);
  const auto w = wave_speeds(bg);
  const Matrix7 A = assemble_A(bg.state(), bg.eos, bg.B01);

  const Vector7 R1 = ep.R(kEntropy);
  for (int slot : {kU, kV, kW, kB2, kB3}) CHECK(R1[slot] == 0.0);
  CHECK(R1[kS] != 0.0);

  for (int i = 0; i < 7; ++i) {
    const double res = (A * ep.R(i) - w.lambdas[i] * ep.R(i)).cwiseAbs().maxCoeff();
    CHECK(res < 1e-10);
    const double lres = (ep.L(i) * A - w.lambdas[i] * ep.L(i)).cwiseAbs().maxCoeff();
    CHECK(lres < 1e-10);
  }
  CHECK((ep.left * ep.right - Matrix7::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("classification") {
  CHECK(classify(BackgroundState::make(0.04, 0.0, 0.1, 1.0)) == HyperbolicityClass::StrictlyHyperbolic);
  CHECK(classify(BackgroundState::make(0.04, 0.0, 0.0, 1.0)) == HyperbolicityClass::DegenerateB01Zero);
  CHECK(classify(BackgroundState::make(0.04, 0.02, 0.1, 0.0)) == HyperbolicityClass::DegenerateB02ZeroDouble);
  const double c0 = sound_speed0(EosParams::normalized(0.04, 0.02));
  CHECK(classify(BackgroundState::make(0.04, 0.02, c0, 0.0)) == HyperbolicityClass::DegenerateB02ZeroTriple);
  CHECK_THROWS_AS(eigen_pairs(BackgroundState::make(0.04, 0.02, 0.1, 0.0)), DegenerateBackground);
  CHECK(to_string(HyperbolicityClass::StrictlyHyperbolic) != to_string(HyperbolicityClass::DegenerateB01Zero));
}

TEST_CASE("spectrum symmetric about zero") {
  const auto w = wave_speeds(BackgroundState::make(0.3, 0.05, 0.4, 0.7));
  auto l = w.lambdas;
  std::sort(l.begin(), l.end());
  for (int i = 0; i < 7; ++i) CHECK(l[i] == doctest::Approx(-l[6 - i]).epsilon(1e-14));
  CHECK(l[3] == 0.0);
}

TEST_CASE("fast speed nondecreasing in B02") {
  double prev = 0.0;
  for (double B02 = 0.0; B02 <= 3.0; B02 += 0.1) {
    const double cf = wave_speeds(BackgroundState::make(0.04, 0.02, 0.1, B02)).cf;
    CHECK(cf >= prev);
    prev = cf;
  }
}

TEST_CASE("random strictly hyperbolic backgrounds") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> delta_d(0.02, 0.66), b_d(0.0, 0.2), B_d(0.05, 2.0);
  int tested = 0;
  while (tested < 100) {
    const auto bg = BackgroundState::make(delta_d(rng), b_d(rng), B_d(rng), B_d(rng));
    if (classify(bg) != HyperbolicityClass::StrictlyHyperbolic) continue;
    ++tested;
    const auto ref = sorted_abs_eigenvalues(bg);
    const auto got = sorted_abs(wave_speeds(bg).lambdas);
    for (int i = 0; i < 7; ++i) CHECK(std::abs(got[i] - ref[i]) < 1e-10);
  }
}
