#include "mhdtriad/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mhdtriad/errors.hpp"

namespace mhdtriad {

void RunRecord::append(double t, const Sample& s) {
  if (!times.empty() && !(t > times.back())) throw std::logic_error("record times must increase strictly");
  times.push_back(t);
  series.push_back(s);
}

Sample sample_field(const SpectralField& field, double min_prominence) {
  const auto& v = field.values();
  Sample s;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  s.min = *lo;
  s.max = *hi;
  double sum = 0.0, sq = 0.0;
  for (double a : v) {
    sum += a;
    sq += a * a;
  }
  s.mean = sum / v.size();
  s.l2_norm = std::sqrt(sq / v.size());
  const auto g = field.derivative(1).values();
  for (double d : g) s.max_abs_gradient = std::max(s.max_abs_gradient, std::abs(d));
  s.soliton_count = count_solitons(field, min_prominence).count;
  return s;
}

double SolitonCensus::median_width() const {
  if (widths.empty()) return 0.0;
  std::vector<double> w(widths);
  std::sort(w.begin(), w.end());
  const std::size_t h = w.size() / 2;
  return w.size() % 2 ? w[h] : 0.5 * (w[h - 1] + w[h]);
}

double SolitonCensus::max_amplitude() const {
  return amplitudes.empty() ? 0.0 : *std::max_element(amplitudes.begin(), amplitudes.end());
}

namespace {

// Lowest value met walking from crest i in direction dir until a strictly higher
// sample; the whole circle when none exists.
double flank_minimum(const std::vector<double>& a, int i, int dir) {
  const int n = static_cast<int>(a.size());
  double lowest = a[i];
  for (int s = 1; s < n; ++s) {
    const double y = a[((i + dir * s) % n + n) % n];
    if (y > a[i]) break;
    lowest = std::min(lowest, y);
  }
  return lowest;
}

// Distance from crest i to where the profile first drops below level, interpolated.
double half_width(const std::vector<double>& a, int i, int dir, double level, double dx) {
  const int n = static_cast<int>(a.size());
  for (int s = 1; s < n; ++s) {
    const double prev = a[((i + dir * (s - 1)) % n + n) % n];
    const double y = a[((i + dir * s) % n + n) % n];
    if (y < level) return dx * ((s - 1) + (prev - level) / (prev - y));
  }
  return dx * n / 2.0;
}

}  // namespace

SolitonCensus count_solitons(const SpectralField& field, double min_prominence) {
  const auto& a = field.values();
  const int n = static_cast<int>(a.size());
  const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
  const double range = *hi - *lo;
  SolitonCensus c;
  if (!(range > 0.0)) return c;
  const double dx = field.grid().dx();

  for (int i = 0; i < n; ++i) {
    const double left = a[(i - 1 + n) % n];
    const double right = a[(i + 1) % n];
    if (!(a[i] > left && a[i] >= right)) continue;
    const double prom = a[i] - std::max(flank_minimum(a, i, -1), flank_minimum(a, i, +1));
    if (!(prom > min_prominence * range)) continue;
    const double level = a[i] - 0.5 * prom;
    c.positions.push_back(field.grid().x(i));
    c.amplitudes.push_back(a[i]);
    c.prominences.push_back(prom);
    c.widths.push_back(half_width(a, i, -1, level, dx) + half_width(a, i, +1, level, dx));
  }
  c.count = static_cast<int>(c.positions.size());
  return c;
}

double characteristic_oracle(double A, double E_f, double t, double x, double tol) {
  const double slope = std::abs(A * E_f) * t;
  if (slope >= 1.0) throw NoConvergence("implicit solution is multivalued at or past breakdown");
  if (A == 0.0 || t == 0.0) return A * std::cos(x);

  // f(a) = a - A cos(x - E a t) is increasing with f' >= 1 - slope > 0 and has
  // its root in [-|A|, |A|]; Newton steps are kept inside the shrinking bracket.
  auto f = [&](double a) { return a - A * std::cos(x - E_f * a * t); };
  double lo = -std::abs(A), hi = std::abs(A);
  double a = A * std::cos(x);
  for (int it = 0; it < 200; ++it) {
    const double fa = f(a);
    if (std::abs(fa) <= tol) return a;
    if (fa > 0.0) hi = a; else lo = a;
    const double df = 1.0 - A * E_f * t * std::sin(x - E_f * a * t);
    double next = a - fa / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= tol) return next;
    a = next;
  }
  throw NoConvergence("characteristic oracle did not converge");
}

double detect_breakdown(const RunRecord& record, double threshold_factor) {
  if (record.series.empty()) throw NotReached("empty record");
  const double target = threshold_factor * record.series.front().max_abs_gradient;
  for (std::size_t i = 1; i < record.series.size(); ++i) {
    const double g1 = record.series[i].max_abs_gradient;
    if (g1 > target) {
      const double g0 = record.series[i - 1].max_abs_gradient;
      const double t0 = record.times[i - 1], t1 = record.times[i];
      return t0 + (t1 - t0) * (target - g0) / (g1 - g0);
    }
  }
  throw NotReached("gradient never exceeded the breakdown threshold");
}

AuditReport conserved_audit(const RunRecord& record, double l2_tolerance) {
  AuditReport r;
  r.l2_tolerance = l2_tolerance;
  if (record.series.empty()) return r;
  const Sample& first = record.series.front();
  for (const Sample& s : record.series) {
    r.mean_drift = std::max(r.mean_drift, std::abs(s.mean - first.mean));
    if (first.l2_norm > 0.0) r.l2_drift = std::max(r.l2_drift, std::abs(s.l2_norm / first.l2_norm - 1.0));
  }
  r.l2_flagged = r.l2_drift > l2_tolerance;
  return r;
}

}  // namespace mhdtriad
