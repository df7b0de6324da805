#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhdtriad/coefficients.hpp"
#include "mhdtriad/solver.hpp"

namespace mhdtriad {

/// A time given either absolutely or as a multiple of the run's breakdown time ("2tb").
struct TimeSpec {
  double value = 0.0;
  bool in_breakdown_units = false;

  double resolve(double t_b) const { return in_breakdown_units ? value * t_b : value; }
  bool operator==(const TimeSpec&) const = default;
};

struct PhysicsSpec {
  double delta = 0.04;
  std::vector<double> b{0.0};
  std::vector<double> B01{0.1};
  std::vector<double> B02{1.0};
  std::vector<double> amplitude{1.0};
  double chi_hat = 1.0;
  double mu_hat = 0.0;
  double eta_hat = 0.0;
  double kappa_hat = 0.0;
  EfVariant ef_variant = kDefaultEfVariant;
  std::string kernel = "sin";
  // Replace the computed coefficient when set.
  std::optional<double> E_f;
  std::optional<double> M_f;
  std::optional<double> Lambda_f;

  bool operator==(const PhysicsSpec&) const = default;
};

struct SolverSpec {
  int n = 512;
  std::optional<double> dt;  ///< unset: chosen from the stability bound, at most 1e-4
  TimeSpec t_end{4.0, true};
  SolveMode mode = SolveMode::Single;
  int record_stride = 50;
  bool viscous = false;
  std::vector<TimeSpec> snapshot_times{{0.0, false}, {1.0, true}, {2.0, true}, {4.0, true}};
  double breakdown_factor = kDefaultBreakdownFactor;
  double min_prominence = kDefaultMinProminence;

  bool operator==(const SolverSpec&) const = default;
};

struct OutputSpec {
  std::string dir;  ///< empty: caller decides
  bool operator==(const OutputSpec&) const = default;
};

/// Unresolved configuration, exactly what the config text says.
struct ManifestSpec {
  std::string preset;
  PhysicsSpec physics;
  SolverSpec solver;
  OutputSpec output;

  bool operator==(const ManifestSpec&) const = default;
};

/// One simulation of a sweep, with everything resolved.
struct RunSpec {
  int index = 0;
  std::string label;
  BackgroundState background;
  TriadCoefficients coefficients;
  double amplitude = 1.0;
  double t_b = 0.0;
  SolverConfig solver;
  SolveMode mode = SolveMode::Single;
  double breakdown_factor = kDefaultBreakdownFactor;
};

struct RunManifest {
  ManifestSpec spec;
  std::vector<RunSpec> runs;
};

struct Preset {
  std::string name;
  std::string description;
  ManifestSpec spec;
};

const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

/// Parses "section.key = value" lines ('#' comments, sections physics, solver,
/// output, preset; "preset = NAME" is accepted as shorthand). Throws ParseError
/// with the line number for malformed lines or unknown keys.
ManifestSpec parse_spec(std::string_view text);

/// Applies one "section.key = value" assignment; line is used for error messages.
void apply_setting(ManifestSpec& spec, std::string_view key, std::string_view value, int line = 0);

/// Expands sweeps and resolves coefficients and solver settings. Throws ValidationError.
RunManifest resolve(const ManifestSpec& spec);

/// parse_spec followed by resolve.
RunManifest parse_config(std::string_view text);

/// Config text that parses back to an equal ManifestSpec.
std::string render_config(const ManifestSpec& spec);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

}  // namespace mhdtriad
