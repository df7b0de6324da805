#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mhdtriad/eos.hpp"
#include "mhdtriad/errors.hpp"

using namespace mhdtriad;

namespace {

StateVector at(double rho, double s) {
  StateVector U;
  U.rho = rho;
  U.s = s;
  return U;
}

template <class F>
double central(F f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace

TEST_CASE("background normalization gives unit pressure") {
  for (double b : {0.0, 0.02, 0.04}) {
    const auto eos = EosParams::normalized(0.04, b);
    CHECK(pressure(at(1.0, 0.0), eos) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("pressure against high precision values") {
  const auto eos = EosParams::normalized(0.04, 0.02);
  // 30 digit evaluations of the closed form
  CHECK(pressure(at(1.1, 0.0), eos) == doctest::Approx(1.10655015234450994).epsilon(1e-14));
  CHECK(pressure(at(0.8, 0.3), eos) == doctest::Approx(0.799070939524318622).epsilon(1e-14));
  CHECK(pressure_rho_rho(at(0.8, 0.3), eos) == doctest::Approx(0.0965563858363338608).epsilon(1e-13));
  CHECK(pressure_rho_s(at(0.8, 0.3), eos) == doctest::Approx(0.0422273260724233418).epsilon(1e-13));
  CHECK(temperature_rho(at(0.8, 0.3), eos) == doctest::Approx(0.0499419337202699138).epsilon(1e-13));
}

TEST_CASE("sound speed") {
  CHECK(sound_speed0(EosParams::normalized(0.04, 0.0)) == doctest::Approx(1.01980390271855697).epsilon(1e-15));
  CHECK(sound_speed0(EosParams::normalized(0.04, 0.02)) == doctest::Approx(1.03015750727542551).epsilon(1e-15));
  for (double delta : {0.04, 0.2, 0.4, 2.0 / 3.0})
    CHECK(sound_speed0(EosParams::normalized(delta, 0.0)) == doctest::Approx(std::sqrt(1 + delta)));

  const auto eos = EosParams::normalized(0.04, 0.04);
  const double fd = central([&](double r) { return pressure(at(r, 0.0), eos); }, 1.0, 1e-5);
  CHECK(sound_speed0(eos) == doctest::Approx(std::sqrt(fd)).epsilon(1e-8));
  CHECK(sound_speed(at(1.0, 0.0), eos) == doctest::Approx(sound_speed0(eos)).epsilon(1e-14));
}

TEST_CASE("P_rho matches finite differences over a density range") {
  for (double b : {0.0, 0.02, 0.04}) {
    const auto eos = EosParams::normalized(0.04, b);
    for (double rho = 0.5; rho <= 1.5 + 1e-12; rho += 0.05) {
      const double fd = central([&](double r) { return pressure(at(r, 0.1), eos); }, rho, 1e-5);
      CHECK(pressure_rho(at(rho, 0.1), eos) == doctest::Approx(fd).epsilon(1e-8));
    }
  }
}

TEST_CASE("remaining derivatives match finite differences") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> rho_d(0.6, 1.6), s_d(-0.5, 0.5), b_d(0.0, 0.1), delta_d(0.02, 0.6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto eos = EosParams::normalized(delta_d(rng), b_d(rng));
    const double rho = rho_d(rng), s = s_d(rng), h = 1e-5;
    auto P = [&](double r, double ss) { return pressure(at(r, ss), eos); };
    auto T = [&](double r, double ss) { return temperature(at(r, ss), eos); };
    auto Pr = [&](double r, double ss) { return pressure_rho(at(r, ss), eos); };
    const auto U = at(rho, s);
    CHECK(pressure_s(U, eos) == doctest::Approx(central([&](double x) { return P(rho, x); }, s, h)).epsilon(1e-8));
    CHECK(pressure_rho_rho(U, eos) ==
          doctest::Approx(central([&](double x) { return Pr(x, s); }, rho, h)).epsilon(1e-7));
    CHECK(pressure_rho_s(U, eos) ==
          doctest::Approx(central([&](double x) { return Pr(rho, x); }, s, h)).epsilon(1e-7));
    CHECK(temperature_rho(U, eos) ==
          doctest::Approx(central([&](double x) { return T(x, s); }, rho, h)).epsilon(1e-7));
    CHECK(temperature_s(U, eos) == doctest::Approx(central([&](double x) { return T(rho, x); }, s, h)).epsilon(1e-7));
  }
}

TEST_CASE("specific heats") {
  const auto eos = EosParams::normalized(0.04, 0.02);
  CHECK(eos.cp() - eos.cv() == doctest::Approx(eos.R));
  CHECK(eos.cp() == doctest::Approx(26.0));
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(EosParams::normalized(0.04, 1.0), DomainError);
  CHECK_THROWS_AS(EosParams::normalized(0.04, -0.1), DomainError);
  CHECK_THROWS_AS(EosParams::normalized(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(EosParams::normalized(0.7, 0.0), DomainError);
  CHECK_NOTHROW(EosParams::normalized(2.0 / 3.0, 0.0));
  const auto eos = EosParams::normalized(0.04, 0.5);
  CHECK_THROWS_AS(pressure(at(2.0, 0.0), eos), DomainError);
  CHECK_THROWS_AS(pressure(at(2.5, 0.0), eos), DomainError);
  CHECK_THROWS_AS(pressure_rho(at(-1.0, 0.0), eos), DomainError);
  CHECK_THROWS_AS(temperature(at(0.0, 0.0), eos), DomainError);
}

TEST_CASE("background state") {
  const auto bg = BackgroundState::make(0.04, 0.02, 0.1, 1.0);
  const auto U = bg.state();
  CHECK(U.rho == 1.0);
  CHECK(U.B2 == 1.0);
  CHECK(U.B3 == 0.0);
  CHECK(U.u == 0.0);
  const auto back = StateVector::from_vector(U.to_vector());
  CHECK(back.B2 == U.B2);
  CHECK(back.s == U.s);
}

// Independent assembly of the flux Jacobian, row by row from the 1-D ideal MHD
// equations in (rho, u, v, w, s, B2, B3).
Matrix7 reference_A(const StateVector& U, const EosParams& eos, double B1) {
  const double r = U.rho;
  const double c2 = (1 + eos.delta) * pressure(U, eos) / (r * (1 - eos.b * r));
  const double ps = eos.delta * pressure(U, eos) / eos.R;
  Matrix7 A = U.u * Matrix7::Identity();
  A.row(0) += Eigen::Matrix<double, 1, 7>({0, r, 0, 0, 0, 0, 0});
  A.row(1) += Eigen::Matrix<double, 1, 7>({c2 / r, 0, 0, 0, ps / r, U.B2 / r, U.B3 / r});
  A.row(2) += Eigen::Matrix<double, 1, 7>({0, 0, 0, 0, 0, -B1 / r, 0});
  A.row(3) += Eigen::Matrix<double, 1, 7>({0, 0, 0, 0, 0, 0, -B1 / r});
  A.row(5) += Eigen::Matrix<double, 1, 7>({0, U.B2, -B1, 0, 0, 0, 0});
  A.row(6) += Eigen::Matrix<double, 1, 7>({0, U.B3, 0, -B1, 0, 0, 0});
  return A;
}

TEST_CASE("flux matrix") {
  const auto bg = BackgroundState::make(0.04, 0.02, 0.1, 1.0);
  const Matrix7 A0 = assemble_A(bg.state(), bg.eos, bg.B01);
  for (int i = 0; i < 7; ++i) CHECK(A0(i, i) == 0.0);
  CHECK(A0(kV, kB2) == doctest::Approx(-0.1));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    StateVector U;
    U.rho = 1.0 + 0.4 * d(rng);
    U.u = d(rng);
    U.v = d(rng);
    U.w = d(rng);
    U.s = 0.3 * d(rng);
    U.B2 = 2 * d(rng);
    U.B3 = 2 * d(rng);
    const double B1 = d(rng);
    const auto eos = EosParams::normalized(0.04 + 0.5 * std::abs(d(rng)), 0.05 * std::abs(d(rng)));
    const Matrix7 A = assemble_A(U, eos, B1);
    CHECK((A - reference_A(U, eos, B1)).cwiseAbs().maxCoeff() < 1e-13);

    // Off the diagonal only the 12 coupling entries may be nonzero.
    const auto ref = reference_A(U, eos, B1);
    int off = 0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (i != j && A(i, j) != 0.0) {
          ++off;
          CHECK(ref(i, j) != 0.0);
        }
    CHECK(off <= 12);
  }
}
