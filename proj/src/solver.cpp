#include "mhdtriad/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "mhdtriad/errors.hpp"

namespace mhdtriad {

SolverConfig SolverConfig::make(const TriadCoefficients& coefficients, int n, double dt, double t_end) {
  SolverConfig cfg;
  cfg.coefficients = coefficients;
  cfg.grid = Grid(n);
  cfg.dt = dt;
  cfg.t_end = t_end;
  cfg.kernel = Kernel::sine(cfg.grid);
  return cfg;
}

SpectralField SolverConfig::initial_field() const {
  if (initial_profile) return SpectralField::from_function(grid, initial_profile);
  const double A = initial_amplitude;
  return SpectralField::from_function(grid, [A](double x) { return A * std::cos(x); });
}

double SolverConfig::stable_dt(double amplitude_growth) const {
  const auto v = initial_field().values();
  double amp = 0.0;
  for (double a : v) amp = std::max(amp, std::abs(a));
  const double k = grid.cutoff();
  double rate = std::abs(coefficients.Lambda_f) * k * k * k + std::abs(coefficients.E_f) * amplitude_growth * amp * k;
  if (viscous) rate += std::abs(coefficients.Omega_f) * k * k;
  double conv = 0.0;
  for (const auto& c : kernel.modes) conv = std::max(conv, std::abs(c));
  rate += std::abs(coefficients.M_f) * conv;
  return rate > 0.0 ? kStabilityConstant / rate : std::numeric_limits<double>::infinity();
}

void SolverConfig::validate() const {
  if (!(dt > 0.0)) throw ValidationError("solver.dt must be positive");
  if (!(t_end > 0.0)) throw ValidationError("solver.t_end must be positive");
  if (record_stride < 1) throw ValidationError("solver.record_stride must be at least 1");
  if (static_cast<int>(kernel.modes.size()) != grid.modes())
    throw ValidationError("kernel was built for a different grid");
  for (double t : snapshot_times)
    if (t < 0.0 || t > t_end) throw ValidationError("snapshot time " + std::to_string(t) + " outside [0, t_end]");
  const double bound = stable_dt();
  if (dt > bound)
    throw ValidationError("solver.dt = " + std::to_string(dt) + " exceeds the RK4 stability bound " +
                          std::to_string(bound));
}

namespace {

// Spectrum-level evaluation with reusable buffers; one instance per simulation.
class Evolution {
 public:
  explicit Evolution(const SolverConfig& cfg)
      : cfg_(cfg),
        fft_(FourierTransform::get(cfg.grid.n())),
        n_(cfg.grid.n()),
        nm_(cfg.grid.modes()),
        cutoff_(cfg.grid.cutoff()),
        a_(n_),
        ax_(n_),
        dmodes_(nm_),
        prod_(nm_) {}

  void mask(Spectrum& s) const {
    for (int m = cutoff_ + 1; m < nm_; ++m) s[m] = 0.0;
  }

  // out = local terms of the right-hand side (everything except the interaction integral).
  void local_terms(const Spectrum& a, Spectrum& out) {
    const auto& c = cfg_.coefficients;
    for (int m = 0; m < nm_; ++m) dmodes_[m] = a[m] * Complex(0.0, m);
    dmodes_[nm_ - 1] = 0.0;
    fft_->inverse(a, a_);
    fft_->inverse(dmodes_, ax_);
    for (int j = 0; j < n_; ++j) a_[j] *= ax_[j];
    fft_->forward(a_, prod_);
    // alpha alpha_x = (alpha^2 / 2)_x has zero mean.
    prod_[0] = 0.0;
    for (int m = 0; m < nm_; ++m) {
      const double k = m;
      // alpha_xxx has symbol (ik)^3 = -i k^3.
      Complex r = -c.E_f * prod_[m] - c.Lambda_f * Complex(0.0, -k * k * k) * a[m];
      if (cfg_.viscous) r += -c.Omega_f * k * k * a[m];
      out[m] = r;
    }
  }

  void single(const Spectrum& a, Spectrum& out) {
    local_terms(a, out);
    const auto& K = cfg_.kernel.modes;
    const double M = cfg_.coefficients.M_f;
    for (int m = 0; m < nm_; ++m) out[m] -= M * a[m] * std::conj(K[m]);
    mask(out);
  }

  void pair(const Spectrum& a1, const Spectrum& a2, Spectrum& out1, Spectrum& out2) {
    local_terms(a1, out1);
    local_terms(a2, out2);
    const auto& K = cfg_.kernel.modes;
    const double M = cfg_.coefficients.M_f;
    for (int m = 0; m < nm_; ++m) {
      out1[m] -= M * a2[m] * std::conj(K[m]);  // int K(zeta - x) alpha2(zeta)
      out2[m] += M * a1[m] * K[m];             // int K(x - zeta) alpha1(zeta)
    }
    mask(out1);
    mask(out2);
  }

  int modes() const { return nm_; }

 private:
  const SolverConfig& cfg_;
  std::shared_ptr<const FourierTransform> fft_;
  int n_, nm_, cutoff_;
  std::vector<double> a_, ax_;
  Spectrum dmodes_, prod_;
};

bool all_finite(const Spectrum& s) {
  return std::all_of(s.begin(), s.end(), [](const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

void axpy(Spectrum& y, const Spectrum& x, double h, const Spectrum& k) {
  for (std::size_t m = 0; m < y.size(); ++m) y[m] = x[m] + h * k[m];
}

// Classical RK4 on one or two modal vectors.
class Stepper {
 public:
  Stepper(Evolution& ev, int nm) : ev_(ev), tmp1_(nm), tmp2_(nm) {
    for (auto* v : {&k1_, &k2_, &k3_, &k4_, &l1_, &l2_, &l3_, &l4_}) v->resize(nm);
  }

  void single(Spectrum& a, double h) {
    ev_.single(a, k1_);
    axpy(tmp1_, a, 0.5 * h, k1_);
    ev_.single(tmp1_, k2_);
    axpy(tmp1_, a, 0.5 * h, k2_);
    ev_.single(tmp1_, k3_);
    axpy(tmp1_, a, h, k3_);
    ev_.single(tmp1_, k4_);
    combine(a, h, k1_, k2_, k3_, k4_);
  }

  void pair(Spectrum& a, Spectrum& b, double h) {
    ev_.pair(a, b, k1_, l1_);
    axpy(tmp1_, a, 0.5 * h, k1_);
    axpy(tmp2_, b, 0.5 * h, l1_);
    ev_.pair(tmp1_, tmp2_, k2_, l2_);
    axpy(tmp1_, a, 0.5 * h, k2_);
    axpy(tmp2_, b, 0.5 * h, l2_);
    ev_.pair(tmp1_, tmp2_, k3_, l3_);
    axpy(tmp1_, a, h, k3_);
    axpy(tmp2_, b, h, l3_);
    ev_.pair(tmp1_, tmp2_, k4_, l4_);
    combine(a, h, k1_, k2_, k3_, k4_);
    combine(b, h, l1_, l2_, l3_, l4_);
  }

 private:
  static void combine(Spectrum& a, double h, const Spectrum& k1, const Spectrum& k2, const Spectrum& k3,
                      const Spectrum& k4) {
    for (std::size_t m = 0; m < a.size(); ++m) a[m] += h / 6.0 * (k1[m] + 2.0 * k2[m] + 2.0 * k3[m] + k4[m]);
  }

  Evolution& ev_;
  Spectrum tmp1_, tmp2_;
  Spectrum k1_, k2_, k3_, k4_, l1_, l2_, l3_, l4_;
};

void check_grid(const SpectralField& f, const SolverConfig& cfg) {
  if (!(f.grid() == cfg.grid)) throw GridMismatch("field grid does not match the solver grid");
}

}  // namespace

SpectralField rhs_single(const SpectralField& field, const SolverConfig& cfg) {
  check_grid(field, cfg);
  Evolution ev(cfg);
  Spectrum out(ev.modes());
  ev.single(field.modes(), out);
  return SpectralField::from_modes(cfg.grid, std::move(out));
}

std::pair<SpectralField, SpectralField> rhs_pair(const SpectralField& f1, const SpectralField& f2,
                                                 const SolverConfig& cfg) {
  check_grid(f1, cfg);
  check_grid(f2, cfg);
  Evolution ev(cfg);
  Spectrum o1(ev.modes()), o2(ev.modes());
  ev.pair(f1.modes(), f2.modes(), o1, o2);
  return {SpectralField::from_modes(cfg.grid, std::move(o1)), SpectralField::from_modes(cfg.grid, std::move(o2))};
}

SpectralField step_rk4(const SpectralField& state, const SolverConfig& cfg, std::optional<double> dt) {
  check_grid(state, cfg);
  Evolution ev(cfg);
  Stepper st(ev, ev.modes());
  Spectrum a = state.modes();
  st.single(a, dt.value_or(cfg.dt));
  if (!all_finite(a)) throw BlowUp("non-finite amplitude after one step", dt.value_or(cfg.dt));
  return SpectralField::from_modes(cfg.grid, std::move(a));
}

PairState step_rk4(const PairState& state, const SolverConfig& cfg, std::optional<double> dt) {
  check_grid(state.first, cfg);
  check_grid(state.second, cfg);
  Evolution ev(cfg);
  Stepper st(ev, ev.modes());
  Spectrum a = state.first.modes(), b = state.second.modes();
  st.pair(a, b, dt.value_or(cfg.dt));
  if (!all_finite(a) || !all_finite(b)) throw BlowUp("non-finite amplitude after one step", dt.value_or(cfg.dt));
  return {SpectralField::from_modes(cfg.grid, std::move(a)), SpectralField::from_modes(cfg.grid, std::move(b))};
}

RunResult simulate(const SolverConfig& cfg, SolveMode mode) {
  cfg.validate();
  Evolution ev(cfg);
  Stepper st(ev, ev.modes());

  Spectrum a = cfg.initial_field().modes();
  ev.mask(a);
  Spectrum b = a;
  const bool pair = mode == SolveMode::Pair;

  const SpectralField f0 = SpectralField::from_modes(cfg.grid, a);
  double amp = 0.0;
  for (double v : f0.values()) amp = std::max(amp, std::abs(v));

  RunResult res{RunRecord{}, {}, {}, f0, std::nullopt};
  if (amp > 0.0 && cfg.coefficients.E_f > 0.0) res.record.t_b_analytic = breakdown_time(amp, cfg.coefficients.E_f);

  std::vector<double> events;
  for (double t : cfg.snapshot_times)
    if (t > 0.0) events.push_back(t);
  events.push_back(cfg.t_end);
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  const bool want_t0 = std::find(cfg.snapshot_times.begin(), cfg.snapshot_times.end(), 0.0) != cfg.snapshot_times.end();
  const bool snapshot_at_end =
      std::find(cfg.snapshot_times.begin(), cfg.snapshot_times.end(), cfg.t_end) != cfg.snapshot_times.end();

  auto record = [&](double t) {
    const SpectralField f = SpectralField::from_modes(cfg.grid, a);
    res.record.append(t, sample_field(f, cfg.min_prominence));
    if (pair) {
      const SpectralField g = SpectralField::from_modes(cfg.grid, b);
      double d = 0.0;
      for (int j = 0; j < cfg.grid.n(); ++j) d = std::max(d, std::abs(f.values()[j] - g.values()[j]));
      res.pair_asymmetry.push_back(d);
    }
  };
  auto snapshot = [&](double t) {
    Snapshot s;
    s.t = t;
    s.values = SpectralField::from_modes(cfg.grid, a).values();
    if (pair) s.values2 = SpectralField::from_modes(cfg.grid, b).values();
    res.snapshots.push_back(std::move(s));
  };

  record(0.0);
  if (want_t0) snapshot(0.0);

  double t = 0.0;
  long step = 0;
  for (double t_next : events) {
    const double span = t_next - t;
    if (span <= 0.0) continue;
    const long steps = std::max(1L, static_cast<long>(std::ceil(span / cfg.dt - 1e-9)));
    const double h = span / steps;
    const double t_start = t;
    for (long s = 1; s <= steps; ++s) {
      if (pair) st.pair(a, b, h); else st.single(a, h);
      ++step;
      t = s == steps ? t_next : t_start + s * h;
      if (!all_finite(a) || (pair && !all_finite(b)))
        throw BlowUp("non-finite amplitude at t = " + std::to_string(t), t);
      if (step % cfg.record_stride == 0) record(t);
    }
    if (t_next < cfg.t_end || snapshot_at_end) snapshot(t_next);
  }
  if (res.record.times.back() < cfg.t_end) record(cfg.t_end);

  res.final_field = SpectralField::from_modes(cfg.grid, a);
  if (pair) res.final_second = SpectralField::from_modes(cfg.grid, b);
  return res;
}

}  // namespace mhdtriad
