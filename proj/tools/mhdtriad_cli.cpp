#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mhdtriad/config.hpp"
#include "mhdtriad/errors.hpp"
#include "mhdtriad/runner.hpp"

using namespace mhdtriad;

namespace {

struct Inputs {
  std::string config;
  std::string preset;
  std::vector<std::string> sets;
  std::string n, dt, t_end;
};

void add_inputs(CLI::App* cmd, Inputs& in, bool solver_flags) {
  cmd->add_option("--config", in.config, "config file (section.key = value lines)");
  cmd->add_option("--preset", in.preset, "named preset, see 'presets'");
  cmd->add_option("--set", in.sets, "extra key=value assignment, applied last");
  if (solver_flags) {
    cmd->add_option("--n", in.n, "grid points (power of two)");
    cmd->add_option("--dt", in.dt, "time step or 'auto'");
    cmd->add_option("--t-end", in.t_end, "final time, e.g. 2.2 or 4tb; later snapshots in the same unit are dropped");
  }
}

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

ManifestSpec build_spec(const Inputs& in) {
  ManifestSpec spec;
  if (!in.config.empty() && !in.preset.empty())
    throw ValidationError("give either --config or --preset; a config file can name its preset");
  if (!in.config.empty()) {
    spec = parse_spec(read_text(in.config));
  } else if (!in.preset.empty()) {
    apply_setting(spec, "preset", in.preset);
  } else if (in.sets.empty()) {
    throw ValidationError("nothing to run: pass --config or --preset");
  }
  if (!in.n.empty()) apply_setting(spec, "solver.n", in.n);
  if (!in.dt.empty()) apply_setting(spec, "solver.dt", in.dt);
  if (!in.t_end.empty()) {
    apply_setting(spec, "solver.t_end", in.t_end);
    // snapshots past a shortened run are dropped; mixed units are left to validation
    auto& snaps = spec.solver.snapshot_times;
    const auto end = spec.solver.t_end;
    std::erase_if(snaps, [&](const TimeSpec& t) { return t.in_breakdown_units == end.in_breakdown_units && t.value > end.value; });
  }
  for (const auto& s : in.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ValidationError("--set expects key=value, got '" + s + "'");
    auto key = s.substr(0, eq);
    key.erase(key.find_last_not_of(' ') + 1);
    apply_setting(spec, key, s.substr(eq + 1));
  }
  return spec;
}

int audit_file(const std::filesystem::path& path, double factor) {
  auto rec = read_record(path);
  try {
    rec.t_b_numeric = detect_breakdown(rec, factor);
  } catch (const NotReached&) {
  }
  std::cout << "# " << path.string() << "\n" << audit_lines(rec, conserved_audit(rec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly nonlinear fast-wave triads in a van der Waals MHD gas"};
  app.require_subcommand(1);

  auto* presets_cmd = app.add_subcommand("presets", "list the built-in presets");

  Inputs coeff_in;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "print the coefficient table for a manifest");
  add_inputs(coeffs_cmd, coeff_in, false);

  Inputs run_in;
  std::optional<std::string> out;
  int jobs = 1;
  auto* run_cmd = app.add_subcommand("run", "execute a manifest and write CSV output");
  add_inputs(run_cmd, run_in, true);
  run_cmd->add_option("--out", out, "output directory (overrides output.dir and MHDTRIAD_OUT)");
  run_cmd->add_option("--jobs", jobs, "simulations run concurrently")->check(CLI::PositiveNumber);

  std::vector<std::string> records;
  double factor = kDefaultBreakdownFactor;
  auto* audit_cmd = app.add_subcommand("audit", "re-analyse existing record.csv files");
  audit_cmd->add_option("records", records, "record.csv files or run output directories")->required();
  audit_cmd->add_option("--factor", factor, "gradient growth factor for breakdown detection");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets_cmd->parsed()) {
      for (const auto& p : presets()) std::cout << p.name << "  " << p.description << "\n";
      return kExitOk;
    }
    if (coeffs_cmd->parsed()) {
      const auto manifest = resolve(build_spec(coeff_in));
      std::cout << coefficient_table(manifest);
      return kExitOk;
    }
    if (run_cmd->parsed()) {
      const auto spec = build_spec(run_in);
      const auto manifest = resolve(spec);
      const auto dir = output_directory(out, spec);
      const auto summary = run_manifest(manifest, dir, jobs, std::cout);
      return summary.exit_code;
    }
    if (audit_cmd->parsed()) {
      for (const auto& r : records) {
        std::filesystem::path p = r;
        if (std::filesystem::is_directory(p)) {
          std::vector<std::filesystem::path> found;
          for (const auto& e : std::filesystem::recursive_directory_iterator(p))
            if (e.path().filename() == "record.csv") found.push_back(e.path());
          std::sort(found.begin(), found.end());
          if (found.empty()) throw IoError("no record.csv below " + p.string());
          for (const auto& f : found) audit_file(f, factor);
        } else {
          audit_file(p, factor);
        }
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BlowUp& e) {
    std::cerr << "blow-up at t=" << e.time() << ": " << e.what() << "\n";
    return kExitBlowUp;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
