#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "experiment.hpp"

namespace dmeee::runner {

/// Values read from a key=value profile file with [phy] and [run] sections.
/// Everything is optional; command-line flags override whatever is set here.
struct FileConfig {
  // [phy] — microseconds for times, Gb/s for the line rate
  std::optional<double> t_atof_us, t_ftoa_us, t_ftod_us, t_dtoa_us, t_idle_us;
  std::optional<double> line_rate_gbps, phi_fast, phi_deep;
  // [run]
  std::optional<std::vector<double>> loads_gbps;
  std::optional<std::vector<ThresholdPair>> thresholds;  // "qf:qd" entries
  std::optional<std::vector<std::uint64_t>> seeds;
  std::optional<double> horizon_s, frame_bytes, max_dwell_us, rate_scale;
  std::optional<std::uint64_t> cycles;
  std::optional<std::string> format, mode;
};

FileConfig parse_config_file(const std::string& path);

/// Folds the file values into the experiment config (profile and run keys).
void apply_file_config(const FileConfig& file, ExperimentConfig& config);

ThresholdPair parse_threshold(const std::string& text);

}  // namespace dmeee::runner
