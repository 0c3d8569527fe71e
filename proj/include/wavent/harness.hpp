#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wavent/region.hpp"

namespace wavent {

// Key-value experiment configuration. Parsed from "key = value" text lines
// ('#' comments); every key is validated against the experiment's schema
// before any compute starts.
struct ExperimentConfig {
  std::string experiment;
  int dim = 2;
  std::vector<double> masses{0.0};
  std::vector<int> grids{256};
  double box = 2.0;                    // half-extent of the wave grid
  std::string region_spec = "ball:1.0";
  std::uint64_t seed = 1;
  int samples = 10;
  std::map<std::string, double> tolerances;
  std::string out;                     // output prefix; empty = no files
  int threads = 0;                     // 0 = env/default
  // gamma
  double lout = 12.0;
  int refine = 1;
  std::string boundary_file;
  int profiles = 20;
  // eigen
  std::vector<int> nodes{256};
  bool extrapolate = true;
  // u1
  std::string profile_file;
  std::optional<double> cut;
  std::optional<std::pair<double, double>> interval;
  bool ant = false;
  std::optional<std::pair<double, double>> balance_cuts;
  // qdec
  int cuts = 17;
  // sweep
  std::string target = "qdec";
  int levels = 3;

  static ExperimentConfig from_file(const std::string& path);
  static ExperimentConfig from_text(const std::string& text);
  void validate() const;

  Region parse_region() const;
  double tol(const std::string& name, double fallback) const;
};

// One result row plus its verdict; the report prints PASS/FAIL per row and
// the harness exit status is nonzero iff any row failed.
struct RunRow {
  std::vector<double> values;
  bool pass = true;
};

struct RunReport {
  std::string experiment;
  std::vector<std::string> header;
  std::vector<RunRow> rows;
  std::vector<std::string> notes;   // convergence tables etc., CSV-ish lines
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;        // console only, never serialized
  int failures() const;
  std::string csv() const;
  std::string json_summary() const;
  void write(const std::string& prefix) const;
};

// Dispatch on config.experiment. Deterministic for fixed config + seed; the
// sample loop is data-parallel over `threads` workers.
RunReport run(const ExperimentConfig& config);

// Repeats the target quantity at doubling resolutions and reports observed
// convergence orders; quantities below their expected order are flagged.
RunReport convergence_sweep(const ExperimentConfig& config);

}  // namespace wavent
