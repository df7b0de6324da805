#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mhdtriad/config.hpp"
#include "mhdtriad/diagnostics.hpp"
#include "mhdtriad/solver.hpp"

namespace mhdtriad {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitBlowUp = 3, kExitIo = 4 };

struct RunOutcome {
  int index = 0;
  bool ok = false;
  std::string status;  ///< "ok", or the failure message
  std::optional<double> blowup_time;
  std::optional<RunResult> result;  ///< empty after a blow-up
  AuditReport audit;
};

struct RunSummary {
  int exit_code = kExitOk;
  std::vector<RunOutcome> outcomes;
};

/// One row per run: parameters, eigen speeds, the triad coefficients and t_b.
std::string coefficient_table(const RunManifest& manifest);

/// Diagnostics CSV followed by a "# audit" block of key,value rows.
std::string record_csv(const RunRecord& record, const AuditReport& audit);

/// Header "# t=... n=... E_f=... M_f=... Lambda_f=... A=...", then n rows "x,alpha".
std::string snapshot_csv(double t, const std::vector<double>& values, const Grid& grid, const RunSpec& run);

/// "key=value" lines of the audit, as echoed to standard output.
std::string audit_lines(const RunRecord& record, const AuditReport& audit);

/// Simulates one run, fills the numeric breakdown time and the audit.
/// BlowUp is caught and reported in the outcome.
RunOutcome execute(const RunSpec& run);

/// Runs every simulation (jobs workers) and writes all files below out.
/// Throws IoError when a file cannot be written.
RunSummary run_manifest(const RunManifest& manifest, const std::filesystem::path& out, int jobs,
                        std::ostream& log);

/// Reads the diagnostics part of a record CSV written by record_csv.
RunRecord read_record(const std::filesystem::path& path);

/// Output directory: explicit flag, then output.dir, then MHDTRIAD_OUT, then "out".
std::filesystem::path output_directory(const std::optional<std::string>& flag, const ManifestSpec& spec);

}  // namespace mhdtriad
