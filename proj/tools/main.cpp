#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "config_file.hpp"
#include "experiment.hpp"

using namespace dmeee;
using namespace dmeee::runner;

namespace {

struct CommonFlags {
  std::string profile_file;
  std::vector<double> loads;
  std::vector<std::uint32_t> qf, qd;
  std::optional<double> horizon_s;
  std::vector<std::uint64_t> seeds;
  std::optional<double> frame_bytes;
  std::optional<double> max_dwell_us;
  std::optional<double> t_atof_us, t_ftoa_us, t_ftod_us, t_dtoa_us, t_idle_us;
  std::optional<double> line_rate_gbps, phi_fast, phi_deep;
  std::string format;
  std::string out_path;
  std::string mode;
  std::optional<std::uint64_t> cycles;
  int jobs = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--profile-file", f.profile_file,
                  "key=value config file with [phy] and [run] sections; flags win");
  cmd->add_option("--load", f.loads, "offered load(s) in Gb/s")->delimiter(',');
  cmd->add_option("--qf", f.qf, "Fast-Wake threshold(s); pairs up with --qd")->delimiter(',');
  cmd->add_option("--qd", f.qd, "Deep-Sleep threshold(s); pairs up with --qf")->delimiter(',');
  cmd->add_option("--horizon", f.horizon_s, "simulated seconds per run");
  cmd->add_option("--seeds", f.seeds, "simulation seeds (one run per seed)")->delimiter(',');
  cmd->add_option("--frame-bytes", f.frame_bytes, "fixed frame size for Poisson traffic");
  cmd->add_option("--max-dwell", f.max_dwell_us,
                  "cap on low-power dwell since the first buffered frame, microseconds");
  cmd->add_option("--t-atof-us", f.t_atof_us, "Active->FastWake transition, microseconds");
  cmd->add_option("--t-ftoa-us", f.t_ftoa_us, "FastWake->Active transition, microseconds");
  cmd->add_option("--t-ftod-us", f.t_ftod_us, "FastWake->DeepSleep transition, microseconds");
  cmd->add_option("--t-dtoa-us", f.t_dtoa_us, "DeepSleep->Active transition, microseconds");
  cmd->add_option("--t-idle-us", f.t_idle_us, "FastWake residence timer, microseconds");
  cmd->add_option("--line-rate-gbps", f.line_rate_gbps, "PHY line rate, Gb/s");
  cmd->add_option("--phi-fast", f.phi_fast, "Fast-Wake power fraction of active");
  cmd->add_option("--phi-deep", f.phi_deep, "Deep-Sleep power fraction of active");
  cmd->add_option("--format", f.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out_path, "write results here instead of stdout");
  cmd->add_option("--jobs", f.jobs, "worker threads (default: hardware concurrency)");
}

ExperimentConfig build_config(const CommonFlags& f) {
  ExperimentConfig config;
  if (!f.profile_file.empty()) {
    apply_file_config(parse_config_file(f.profile_file), config);
  }
  if (!f.loads.empty()) config.loads_gbps = f.loads;
  if (!f.qf.empty() || !f.qd.empty()) {
    if (f.qf.size() != f.qd.size()) {
      throw std::runtime_error("--qf and --qd must be given the same number of times");
    }
    config.thresholds.clear();
    for (std::size_t i = 0; i < f.qf.size(); ++i) {
      config.thresholds.push_back({f.qf[i], f.qd[i]});
    }
  }
  if (f.horizon_s) config.horizon_s = *f.horizon_s;
  if (!f.seeds.empty()) config.seeds = f.seeds;
  if (f.frame_bytes) config.frame_bytes = *f.frame_bytes;
  if (f.max_dwell_us) config.max_dwell_s = *f.max_dwell_us * 1e-6;
  if (f.t_atof_us) config.profile.t_atof = *f.t_atof_us * 1e-6;
  if (f.t_ftoa_us) config.profile.t_ftoa = *f.t_ftoa_us * 1e-6;
  if (f.t_ftod_us) config.profile.t_ftod = *f.t_ftod_us * 1e-6;
  if (f.t_dtoa_us) config.profile.t_dtoa = *f.t_dtoa_us * 1e-6;
  if (f.t_idle_us) config.profile.t_idle = *f.t_idle_us * 1e-6;
  if (f.line_rate_gbps) config.profile.line_rate = *f.line_rate_gbps * 1e9;
  if (f.phi_fast) config.profile.phi_fast = *f.phi_fast;
  if (f.phi_deep) config.profile.phi_deep = *f.phi_deep;
  if (f.cycles) config.oracle_cycles = *f.cycles;
  config.jobs = f.jobs;
  if (!f.mode.empty()) {
    if (f.mode == "model") config.mode = RunMode::model;
    else if (f.mode == "sim") config.mode = RunMode::sim;
    else if (f.mode == "both") config.mode = RunMode::both;
    else throw std::runtime_error("unknown mode: " + f.mode);
  }
  return config;
}

std::string pick_format(const CommonFlags& f) {
  if (!f.format.empty()) {
    return f.format;
  }
  if (!f.profile_file.empty()) {
    const FileConfig file = parse_config_file(f.profile_file);
    if (file.format) return *file.format;
  }
  return "csv";
}

void emit(const CommonFlags& f, const std::string& payload) {
  if (f.out_path.empty()) {
    std::fputs(payload.c_str(), stdout);
    return;
  }
  std::ofstream out(f.out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + f.out_path);
  }
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-mode EEE frame-coalescing model and simulator"};
  app.require_subcommand(1);

  CommonFlags sweep_flags, validate_flags, trace_flags, oracle_flags;
  std::string cycle_log, trace_path;
  double rate_scale = 1.0;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "run the model and/or the simulator over a load/threshold grid");
  add_common_flags(sweep, sweep_flags);
  sweep->add_option("--mode", sweep_flags.mode, "model | sim | both")
      ->check(CLI::IsMember({"model", "sim", "both"}));
  sweep->add_option("--cycle-log", cycle_log,
                    "write the per-cycle log (single point, single seed)");

  CLI::App* validate = app.add_subcommand(
      "validate", "cross-check model, simulator and renewal oracle; nonzero exit on failure");
  add_common_flags(validate, validate_flags);
  validate->add_option("--cycles", validate_flags.cycles, "renewal-oracle cycles per point");

  CLI::App* trace = app.add_subcommand("trace", "replay a timestamp,size trace file");
  add_common_flags(trace, trace_flags);
  trace->add_option("file", trace_path, "trace file: \"timestamp_s,bytes\" per line")
      ->required();
  trace->add_option("--rate-scale", rate_scale, "multiply trace timestamps by this factor");
  trace->add_option("--cycle-log", cycle_log,
                    "write the per-cycle log (single threshold pair)");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Monte-Carlo renewal estimates of p_d, E[T_f], E[T_d] vs closed forms");
  add_common_flags(oracle, oracle_flags);
  oracle->add_option("--cycles", oracle_flags.cycles, "cycles per grid point");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      const auto config = build_config(sweep_flags);
      const auto rows = run_sweep(config, cycle_log);
      emit(sweep_flags, pick_format(sweep_flags) == "json" ? to_json(rows) : to_csv(rows));
      return 0;
    }
    if (*validate) {
      const auto config = build_config(validate_flags);
      const ValidateReport report = run_validate(config);
      emit(validate_flags,
           pick_format(validate_flags) == "json" ? to_json(report.rows) : to_csv(report.rows));
      for (const std::string& line : report.lines) {
        std::fprintf(stderr, "%s\n", line.c_str());
      }
      return report.pass() ? 0 : 1;
    }
    if (*trace) {
      const auto config = build_config(trace_flags);
      std::optional<double> horizon = trace_flags.horizon_s;
      const auto rows = run_trace(config, trace_path, rate_scale, horizon, cycle_log);
      emit(trace_flags, pick_format(trace_flags) == "json" ? to_json(rows) : to_csv(rows));
      return 0;
    }
    if (*oracle) {
      const auto config = build_config(oracle_flags);
      const auto rows = run_oracle(config);
      emit(oracle_flags, pick_format(oracle_flags) == "json" ? to_json(rows) : to_csv(rows));
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
