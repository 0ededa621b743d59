#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmeee/model.hpp"
#include "dmeee/oracle.hpp"
#include "dmeee/simulator.hpp"
#include "dmeee/types.hpp"

namespace dmeee::runner {

struct ThresholdPair {
  std::uint32_t qf = 1;
  std::uint32_t qd = 1;
};

enum class RunMode { model, sim, both };

/// One experiment description: the cross product of loads and thresholds,
/// simulated repeatedly with the listed seeds.
struct ExperimentConfig {
  PhyProfile profile = PhyProfile::default_40g();
  std::vector<ThresholdPair> thresholds = {{1, 1}, {2, 8}, {8, 32}, {32, 128}};
  std::vector<double> loads_gbps = {2, 6, 10, 14, 18, 22, 26, 30, 34, 38};
  double horizon_s = 1.0;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  double frame_bytes = 1500.0;
  RunMode mode = RunMode::both;
  std::optional<double> max_dwell_s;
  std::uint64_t oracle_cycles = 1'000'000;
  int jobs = 0;  // worker threads; 0 picks the hardware concurrency

  void validate() const;
};

/// One output row. Aggregated simulation rows carry 95% confidence-interval
/// half-widths (Student-t over the seed repetitions) and leave `seed` empty;
/// the marker `unstable` replaces all metrics when rho >= 1.
struct ResultRow {
  std::string mode;  // "model" | "sim"
  double load_gbps = 0.0;
  std::uint32_t qf = 1;
  std::uint32_t qd = 1;
  bool unstable = false;
  std::optional<double> phi, phi_ci, delay_s, delay_ci, rho_f, rho_d, p_d;
  std::optional<std::uint64_t> seed;
  std::optional<double> horizon_s;
};

struct OracleRow {
  double load_gbps = 0.0;
  std::uint32_t qf = 1;
  std::uint32_t qd = 1;
  OracleEstimate est;
  double p_deep_model = 0.0, e_tf_model = 0.0, e_td_model = 0.0;
  double z_p_deep = 0.0, z_e_tf = 0.0, z_e_td = 0.0;
};

struct ValidateReport {
  std::vector<ResultRow> rows;
  std::vector<OracleRow> oracle_rows;
  double max_phi_dev = 0.0;
  double worst_abs_z = 0.0;
  std::string worst_phi_point, worst_z_point;
  bool phi_pass = false;
  bool oracle_pass = false;
  std::vector<std::string> lines;  // human-readable summary

  bool pass() const { return phi_pass && oracle_pass; }
};

// Tolerances of the validation gate.
inline constexpr double kPhiTolerance = 0.015;  // |phi_model - mean phi_sim|
inline constexpr double kOracleSigmas = 3.0;    // oracle agreement in standard errors

/// Cross product of loads x thresholds; model and/or aggregated sim rows in a
/// canonical order (load ascending, then (qf, qd), then model before sim).
/// `cycle_log_path`, when non-empty, dumps the per-cycle log and requires a
/// single-point single-seed sim configuration.
std::vector<ResultRow> run_sweep(const ExperimentConfig& config,
                                 const std::string& cycle_log_path = {});

/// Monte-Carlo renewal estimates against the closed forms for every grid
/// point, one run per point with a seed derived from seeds.front().
std::vector<OracleRow> run_oracle(const ExperimentConfig& config);

/// Model vs simulation vs renewal oracle over the grid; pass/fail per the
/// pinned tolerances.
ValidateReport run_validate(const ExperimentConfig& config);

/// Trace replay per threshold pair plus model rows at the trace's measured
/// mean rate and mean frame size.
std::vector<ResultRow> run_trace(const ExperimentConfig& config, const std::string& path,
                                 double rate_scale, std::optional<double> horizon_s,
                                 const std::string& cycle_log_path = {});

std::string to_csv(const std::vector<ResultRow>& rows);
std::string to_json(const std::vector<ResultRow>& rows);
std::string to_csv(const std::vector<OracleRow>& rows);
std::string to_json(const std::vector<OracleRow>& rows);

}  // namespace dmeee::runner
