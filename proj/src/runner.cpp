#include "mhdtriad/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "mhdtriad/errors.hpp"

namespace mhdtriad {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

std::string run_dir_name(int index) {
  std::string s = std::to_string(index);
  if (s.size() < 2) s = "0" + s;
  return "run_" + s;
}

}  // namespace

std::string coefficient_table(const RunManifest& manifest) {
  std::string s =
      "run,b,B01,B02,A,delta,chi_hat,c0,ca,cs,cf,G0,H0,gamma_f,gamma_s,E_f,M_f,Lambda_f,Omega_f,Omega_e,t_b\n";
  for (const auto& r : manifest.runs) {
    const auto& c = r.coefficients;
    const auto& bg = r.background;
    const double row[] = {bg.eos.b, bg.B01,   bg.B02,     r.amplitude, bg.eos.delta, bg.chi_hat, c.c0,
                          c.ca,     c.cs,     c.cf,       c.G0,        c.H0,         c.gamma_f,  c.gamma_s,
                          c.E_f,    c.M_f,    c.Lambda_f, c.Omega_f,   c.Omega_e,    r.t_b};
    s += std::to_string(r.index);
    for (double v : row) s += "," + format_double(v);
    s += "\n";
  }
  return s;
}

std::string record_csv(const RunRecord& record, const AuditReport& audit) {
  std::string s = "t,min,max,max_abs_gradient,mean,l2_norm,soliton_count\n";
  for (std::size_t i = 0; i < record.times.size(); ++i) {
    const auto& p = record.series[i];
    s += format_double(record.times[i]) + "," + format_double(p.min) + "," + format_double(p.max) + "," +
         format_double(p.max_abs_gradient) + "," + format_double(p.mean) + "," + format_double(p.l2_norm) + "," +
         std::to_string(p.soliton_count) + "\n";
  }
  s += "# audit\nkey,value\n";
  s += "mean_drift," + format_double(audit.mean_drift) + "\n";
  s += "l2_drift," + format_double(audit.l2_drift) + "\n";
  s += "l2_tolerance," + format_double(audit.l2_tolerance) + "\n";
  s += std::string("l2_flagged,") + (audit.l2_flagged ? "1" : "0") + "\n";
  s += "t_b_analytic," + format_double(record.t_b_analytic) + "\n";
  s += "t_b_numeric," + (record.t_b_numeric ? format_double(*record.t_b_numeric) : std::string("nan")) + "\n";
  return s;
}

std::string audit_lines(const RunRecord& record, const AuditReport& audit) {
  std::string s;
  s += "mean_drift=" + format_double(audit.mean_drift) + "\n";
  s += "l2_drift=" + format_double(audit.l2_drift) + "\n";
  s += std::string("l2_flagged=") + (audit.l2_flagged ? "1" : "0") + "\n";
  s += "t_b_analytic=" + format_double(record.t_b_analytic) + "\n";
  s += "t_b_numeric=" + (record.t_b_numeric ? format_double(*record.t_b_numeric) : std::string("nan")) + "\n";
  return s;
}

std::string snapshot_csv(double t, const std::vector<double>& values, const Grid& grid, const RunSpec& run) {
  const auto& c = run.coefficients;
  std::string s = "# t=" + format_double(t) + " n=" + std::to_string(grid.n()) + " E_f=" + format_double(c.E_f) +
                  " M_f=" + format_double(c.M_f) + " Lambda_f=" + format_double(c.Lambda_f) +
                  " A=" + format_double(run.amplitude) + "\n";
  for (int j = 0; j < grid.n(); ++j) s += format_double(grid.x(j)) + "," + format_double(values[j]) + "\n";
  return s;
}

RunOutcome execute(const RunSpec& run) {
  RunOutcome o;
  o.index = run.index;
  try {
    o.result = simulate(run.solver, run.mode);
    auto& rec = o.result->record;
    rec.t_b_analytic = run.t_b;
    try {
      rec.t_b_numeric = detect_breakdown(rec, run.breakdown_factor);
    } catch (const NotReached&) {
    }
    o.audit = conserved_audit(rec);
    o.ok = true;
    o.status = "ok";
  } catch (const BlowUp& e) {
    o.ok = false;
    o.blowup_time = e.time();
    o.status = std::string("blowup: ") + e.what();
  }
  return o;
}

RunSummary run_manifest(const RunManifest& manifest, const std::filesystem::path& out, int jobs,
                        std::ostream& log) {
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) throw IoError("cannot create " + out.string() + ": " + ec.message());
  write_file(out / "manifest.txt", render_config(manifest.spec));
  write_file(out / "coefficients.csv", coefficient_table(manifest));

  const int count = static_cast<int>(manifest.runs.size());
  RunSummary summary;
  summary.outcomes.resize(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) summary.outcomes[i] = execute(manifest.runs[i]);
  };
  jobs = std::clamp(jobs, 1, std::max(count, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  // Files are written after all runs finish, in run order.
  std::string status;
  for (int i = 0; i < count; ++i) {
    const auto& run = manifest.runs[i];
    const auto& o = summary.outcomes[i];
    const auto dir = out / run_dir_name(i);
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    status += run_dir_name(i) + " " + run.label + ": " + o.status + "\n";
    if (!o.ok) {
      summary.exit_code = kExitBlowUp;
      log << run_dir_name(i) << " " << o.status << "\n";
      continue;
    }
    write_file(dir / "record.csv", record_csv(o.result->record, o.audit));
    for (std::size_t k = 0; k < o.result->snapshots.size(); ++k) {
      const auto& snap = o.result->snapshots[k];
      const std::string stem = "snapshot_" + std::to_string(k);
      write_file(dir / (stem + ".csv"), snapshot_csv(snap.t, snap.values, run.solver.grid, run));
      if (!snap.values2.empty())
        write_file(dir / (stem + "_alpha2.csv"), snapshot_csv(snap.t, snap.values2, run.solver.grid, run));
    }
    log << "[" << run_dir_name(i) << "] " << run.label << "\n" << audit_lines(o.result->record, o.audit);
  }
  status += summary.exit_code == kExitOk ? "complete\n" : "partial\n";
  write_file(out / "status.txt", status);
  return summary;
}

RunRecord read_record(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path.string());
  RunRecord rec;
  std::string line;
  int number = 0;
  if (!std::getline(f, line) || line.rfind("t,min,max", 0) != 0) throw ParseError("missing record header", 1);
  ++number;
  while (std::getline(f, line)) {
    ++number;
    if (line.empty()) continue;
    if (line[0] == '#') break;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(row, cell, ',')) {
      try {
        v.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError("bad number '" + cell + "'", number);
      }
    }
    if (v.size() != 7) throw ParseError("expected 7 columns", number);
    rec.append(v[0], Sample{v[1], v[2], v[3], v[4], v[5], static_cast<int>(v[6])});
  }
  // The analytic breakdown time is kept from a previous audit block if present.
  while (std::getline(f, line))
    if (line.rfind("t_b_analytic,", 0) == 0) rec.t_b_analytic = std::stod(line.substr(13));
  return rec;
}

std::filesystem::path output_directory(const std::optional<std::string>& flag, const ManifestSpec& spec) {
  if (flag) return *flag;
  if (!spec.output.dir.empty()) return spec.output.dir;
  if (const char* env = std::getenv("MHDTRIAD_OUT"); env && *env) return env;
  return "out";
}

}  // namespace mhdtriad
