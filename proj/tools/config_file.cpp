#include "config_file.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace dmeee::runner {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(trim(s.substr(pos)));
      break;
    }
    out.push_back(trim(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " + what);
}

double to_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    fail(line, "expected a number, got \"" + s + "\"");
  }
  return v;
}

std::uint64_t to_uint(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    fail(line, "expected an integer, got \"" + s + "\"");
  }
  return v;
}

}  // namespace

ThresholdPair parse_threshold(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::runtime_error("threshold must look like \"qf:qd\", got \"" + text + "\"");
  }
  ThresholdPair t;
  const std::string qf = trim(text.substr(0, colon));
  const std::string qd = trim(text.substr(colon + 1));
  std::uint32_t v = 0;
  auto r1 = std::from_chars(qf.data(), qf.data() + qf.size(), v);
  if (r1.ec != std::errc{} || r1.ptr != qf.data() + qf.size()) {
    throw std::runtime_error("bad qf in threshold \"" + text + "\"");
  }
  t.qf = v;
  auto r2 = std::from_chars(qd.data(), qd.data() + qd.size(), v);
  if (r2.ec != std::errc{} || r2.ptr != qd.data() + qd.size()) {
    throw std::runtime_error("bad qd in threshold \"" + text + "\"");
  }
  t.qd = v;
  return t;
}

FileConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  FileConfig cfg;
  std::string section;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        fail(line_no, "unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "phy" && section != "run") {
        fail(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(line_no, "expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section == "phy") {
      if (key == "t_atof_us") cfg.t_atof_us = to_double(value, line_no);
      else if (key == "t_ftoa_us") cfg.t_ftoa_us = to_double(value, line_no);
      else if (key == "t_ftod_us") cfg.t_ftod_us = to_double(value, line_no);
      else if (key == "t_dtoa_us") cfg.t_dtoa_us = to_double(value, line_no);
      else if (key == "t_idle_us") cfg.t_idle_us = to_double(value, line_no);
      else if (key == "line_rate_gbps") cfg.line_rate_gbps = to_double(value, line_no);
      else if (key == "phi_fast") cfg.phi_fast = to_double(value, line_no);
      else if (key == "phi_deep") cfg.phi_deep = to_double(value, line_no);
      else fail(line_no, "unknown [phy] key \"" + key + "\"");
    } else if (section == "run") {
      if (key == "loads_gbps") {
        std::vector<double> loads;
        for (const auto& item : split(value, ',')) loads.push_back(to_double(item, line_no));
        cfg.loads_gbps = std::move(loads);
      } else if (key == "thresholds") {
        std::vector<ThresholdPair> ts;
        for (const auto& item : split(value, ',')) {
          try {
            ts.push_back(parse_threshold(item));
          } catch (const std::exception& e) {
            fail(line_no, e.what());
          }
        }
        cfg.thresholds = std::move(ts);
      } else if (key == "seeds") {
        std::vector<std::uint64_t> seeds;
        for (const auto& item : split(value, ',')) seeds.push_back(to_uint(item, line_no));
        cfg.seeds = std::move(seeds);
      } else if (key == "horizon_s") {
        cfg.horizon_s = to_double(value, line_no);
      } else if (key == "frame_bytes") {
        cfg.frame_bytes = to_double(value, line_no);
      } else if (key == "max_dwell_us") {
        cfg.max_dwell_us = to_double(value, line_no);
      } else if (key == "rate_scale") {
        cfg.rate_scale = to_double(value, line_no);
      } else if (key == "cycles") {
        cfg.cycles = to_uint(value, line_no);
      } else if (key == "format") {
        cfg.format = value;
      } else if (key == "mode") {
        cfg.mode = value;
      } else {
        fail(line_no, "unknown [run] key \"" + key + "\"");
      }
    } else {
      fail(line_no, "key outside of a [phy] or [run] section");
    }
  }
  return cfg;
}

void apply_file_config(const FileConfig& file, ExperimentConfig& config) {
  if (file.t_atof_us) config.profile.t_atof = *file.t_atof_us * 1e-6;
  if (file.t_ftoa_us) config.profile.t_ftoa = *file.t_ftoa_us * 1e-6;
  if (file.t_ftod_us) config.profile.t_ftod = *file.t_ftod_us * 1e-6;
  if (file.t_dtoa_us) config.profile.t_dtoa = *file.t_dtoa_us * 1e-6;
  if (file.t_idle_us) config.profile.t_idle = *file.t_idle_us * 1e-6;
  if (file.line_rate_gbps) config.profile.line_rate = *file.line_rate_gbps * 1e9;
  if (file.phi_fast) config.profile.phi_fast = *file.phi_fast;
  if (file.phi_deep) config.profile.phi_deep = *file.phi_deep;
  if (file.loads_gbps) config.loads_gbps = *file.loads_gbps;
  if (file.thresholds) config.thresholds = *file.thresholds;
  if (file.seeds) config.seeds = *file.seeds;
  if (file.horizon_s) config.horizon_s = *file.horizon_s;
  if (file.frame_bytes) config.frame_bytes = *file.frame_bytes;
  if (file.max_dwell_us) config.max_dwell_s = *file.max_dwell_us * 1e-6;
  if (file.cycles) config.oracle_cycles = *file.cycles;
}

}  // namespace dmeee::runner
