#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mhdtriad/errors.hpp"
#include "mhdtriad/runner.hpp"

using namespace mhdtriad;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& text, bool skip_header) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  if (skip_header) std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream l(line);
    std::string cell;
    while (std::getline(l, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("mhdtriad_test_" + name);
  fs::remove_all(p);
  return p;
}

const char* kSmall = "preset = case1\nsolver.n = 64\nsolver.t_end = 0.5tb\nsolver.snapshot_times = 0, 0.25tb, 0.5tb\n";

}  // namespace

TEST_CASE("coefficient tables") {
  const auto t1 = parse_csv(coefficient_table(parse_config("preset = case1\n")), true);
  REQUIRE(t1.size() == 3u);
  for (const auto& row : t1) {
    const double E = row[15], tb = row[20];
    CHECK(std::abs(tb * E - 1.0) <= 1e-12);
    CHECK(std::abs(row[13] + row[14] - 1.0) <= 1e-14);
  }
  const auto t4 = parse_csv(coefficient_table(parse_config("preset = case4\n")), true);
  REQUIRE(t4.size() == 4u);
  for (std::size_t i = 1; i < t4.size(); ++i) CHECK(t4[i][17] < t4[i - 1][17]);
  CHECK(t4[3][2] == 0.02);
}

TEST_CASE("run writes records, snapshots and status") {
  const auto dir = scratch("run");
  std::ostringstream log;
  const auto m = parse_config(kSmall);
  const auto summary = run_manifest(m, dir, 1, log);
  CHECK(summary.exit_code == kExitOk);
  CHECK(slurp(dir / "status.txt").find("complete") != std::string::npos);
  CHECK(parse_spec(slurp(dir / "manifest.txt")) == m.spec);
  for (int i = 0; i < 3; ++i) {
    const auto run = dir / ("run_0" + std::to_string(i));
    const auto snap = slurp(run / "snapshot_2.csv");
    CHECK(snap.rfind("# t=", 0) == 0);
    CHECK(snap.find(" n=64 ") != std::string::npos);
    const auto body = snap.substr(snap.find('\n') + 1);
    const auto rows = parse_csv(body, false);
    REQUIRE(rows.size() == 64u);
    CHECK(rows[0][0] == 0.0);
    CHECK(rows[0][1] > 0.5);
    const auto text = slurp(run / "record.csv");
    CHECK(text.rfind("t,min,max,max_abs_gradient,mean,l2_norm,soliton_count\n", 0) == 0);
    CHECK(text.find("# audit\nkey,value\nmean_drift,") != std::string::npos);
  }
  CHECK(log.str().find("l2_drift=") != std::string::npos);

  // Re-reading a record gives back the same audit.
  const auto rec = read_record(dir / "run_01" / "record.csv");
  const auto& orig = summary.outcomes[1].result->record;
  CHECK(rec.times == orig.times);
  CHECK(rec.series.back().l2_norm == orig.series.back().l2_norm);
  CHECK(rec.t_b_analytic == orig.t_b_analytic);
  CHECK(conserved_audit(rec).l2_drift == summary.outcomes[1].audit.l2_drift);
}

TEST_CASE("identical manifests give identical bytes") {
  const auto a = scratch("det_a"), b = scratch("det_b");
  std::ostringstream log;
  const auto m = parse_config(kSmall);
  run_manifest(m, a, 1, log);
  run_manifest(m, b, 3, log);
  for (const auto& e : fs::recursive_directory_iterator(a)) {
    if (!e.is_regular_file()) continue;
    const auto rel = fs::relative(e.path(), a);
    CHECK(slurp(e.path()) == slurp(b / rel));
  }
}

TEST_CASE("pair mode writes the second amplitude") {
  const auto dir = scratch("pair");
  std::ostringstream log;
  const auto m = parse_config(std::string(kSmall) + "physics.b = 0.02\nsolver.mode = pair\n");
  run_manifest(m, dir, 1, log);
  CHECK(slurp(dir / "run_00" / "snapshot_1.csv") == slurp(dir / "run_00" / "snapshot_1_alpha2.csv"));
}

TEST_CASE("blow-up is reported, not thrown") {
  // Negative diffusion: every mode grows until the doubles overflow.
  auto m = parse_config("preset = zk\nsolver.n = 64\nsolver.snapshot_times =\n");
  auto& cfg = m.runs[0].solver;
  cfg.viscous = true;
  cfg.coefficients.Omega_f = -1.0;
  cfg.dt = 1e-3;
  const auto out = execute(m.runs[0]);
  CHECK_FALSE(out.ok);
  REQUIRE(out.blowup_time.has_value());
  CHECK(*out.blowup_time > 0.0);

  const auto dir = scratch("blowup");
  std::ostringstream log;
  CHECK(run_manifest(m, dir, 1, log).exit_code == kExitBlowUp);
  CHECK(slurp(dir / "status.txt").find("partial") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "run_00" / "record.csv"));
}

TEST_CASE("unwritable output") {
  const auto file = scratch("file");
  std::ofstream(file) << "x";
  std::ostringstream log;
  CHECK_THROWS_AS(run_manifest(parse_config(kSmall), file / "sub", 1, log), IoError);
  CHECK_THROWS_AS(read_record(file / "missing.csv"), IoError);
}

TEST_CASE("output directory precedence") {
  ManifestSpec spec;
  ::unsetenv("MHDTRIAD_OUT");
  CHECK(output_directory({}, spec) == fs::path("out"));
  ::setenv("MHDTRIAD_OUT", "/tmp/env_out", 1);
  CHECK(output_directory({}, spec) == fs::path("/tmp/env_out"));
  spec.output.dir = "cfg_out";
  CHECK(output_directory({}, spec) == fs::path("cfg_out"));
  CHECK(output_directory(std::string("flag_out"), spec) == fs::path("flag_out"));
  ::unsetenv("MHDTRIAD_OUT");
}
