#pragma once

// Post-breakdown runs behind the qualitative soliton checks. Shared by the
// acceptance suite and the fixture generator so both see the same setup.

#include <string>
#include <vector>

#include "mhdtriad/config.hpp"
#include "mhdtriad/diagnostics.hpp"
#include "mhdtriad/runner.hpp"

namespace soliton_cases {

struct Case {
  std::string label;
  std::string config;
};

// Cases I-III compared at t = 2.2 (about 4 t_b), the B02 sweep at t = 0.5
// where the B02 = 0 profile has steepened but not yet shocked into noise.
// The last entry is the KdV regression.
inline std::vector<Case> cases(int n) {
  const std::string grid = "solver.n = " + std::to_string(n) + "\nsolver.snapshot_times =\n";
  const std::string late = "physics.b = 0.02\nsolver.t_end = 2.2\n" + grid;
  std::vector<Case> out = {
      {"case1", "preset = case1\n" + late},
      {"case2", "preset = case2\n" + late},
      {"case3", "preset = case3\n" + late},
  };
  for (const char* b02 : {"0", "0.5", "1", "2"})
    out.push_back({std::string("B02=") + b02,
                   "preset = case6\nphysics.B02 = " + std::string(b02) + "\nsolver.t_end = 0.5\n" + grid});
  // Soliton train from cosine data at 3.6 breakdown times.
  out.push_back({"zk", "preset = zk\nsolver.t_end = 3.6tb\n" + grid});
  return out;
}

struct Row {
  std::string label;
  int n = 0;
  double t = 0.0;
  int count = 0;
  double median_width = 0.0;
  double max_amplitude = 0.0;
  double max_abs_gradient = 0.0;
};

inline Row evaluate(const Case& c, int n) {
  const auto manifest = mhdtriad::parse_config(c.config);
  const auto& run = manifest.runs.at(0);
  const auto outcome = mhdtriad::execute(run);
  if (!outcome.ok) throw std::runtime_error(c.label + ": " + outcome.status);
  const auto& res = *outcome.result;
  const auto census = mhdtriad::count_solitons(res.final_field, run.solver.min_prominence);
  Row r;
  r.label = c.label;
  r.n = n;
  r.t = res.record.times.back();
  r.count = census.count;
  r.median_width = census.median_width();
  r.max_amplitude = census.max_amplitude();
  r.max_abs_gradient = res.record.series.back().max_abs_gradient;
  return r;
}

}  // namespace soliton_cases
