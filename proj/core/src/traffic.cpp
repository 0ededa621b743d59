#include "dmeee/traffic.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace dmeee {
namespace {

constexpr double kEqualStampSpacing = 1e-9;

// 53-bit uniform in [0, 1).
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double_field(std::string_view field, std::size_t line, const char* what) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw TraceParseError(line, std::string("non-numeric ") + what);
  }
  return value;
}

std::uint64_t parse_uint_field(std::string_view field, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw TraceParseError(line, std::string("non-numeric ") + what);
  }
  return value;
}

}  // namespace

PoissonSource::PoissonSource(double lambda, double frame_bytes, std::uint64_t seed)
    : lambda_(lambda), frame_bytes_(frame_bytes), rng_(seed) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("PoissonSource: lambda must be > 0");
  }
  if (!(frame_bytes > 0.0)) {
    throw std::invalid_argument("PoissonSource: frame_bytes must be > 0");
  }
}

std::optional<Arrival> PoissonSource::next() {
  const double gap = -std::log1p(-uniform01(rng_)) / lambda_;
  clock_ += gap;
  return Arrival{clock_, frame_bytes_};
}

TraceSource::TraceSource(TraceHandle records, double scale)
    : records_(std::move(records)), scale_(scale) {
  if (!records_) {
    throw std::invalid_argument("TraceSource: null trace handle");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("TraceSource: scale must be > 0");
  }
}

std::optional<Arrival> TraceSource::next() {
  if (cursor_ >= records_->size()) {
    return std::nullopt;
  }
  const TraceRecord& rec = (*records_)[cursor_++];
  double t = rec.timestamp * scale_;
  if (last_time_ >= 0.0 && t <= last_time_) {
    t = last_time_ + kEqualStampSpacing;
  }
  last_time_ = t;
  return Arrival{t, static_cast<double>(rec.size_bytes)};
}

std::unique_ptr<ArrivalSource> make_source(const TrafficSpec& spec, std::uint64_t seed) {
  spec.validate();
  if (spec.kind == TrafficSpec::Kind::poisson) {
    return std::make_unique<PoissonSource>(spec.lambda, spec.frame_bytes, seed);
  }
  return std::make_unique<TraceSource>(spec.trace, spec.trace_scale);
}

TraceParseError::TraceParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<TraceRecord> parse_trace(std::istream& input) {
  std::vector<TraceRecord> records;
  std::string raw;
  std::size_t line_no = 0;
  double prev_ts = -1.0;
  while (std::getline(input, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw TraceParseError(line_no, "expected \"timestamp,bytes\"");
    }
    const double ts = parse_double_field(trim(line.substr(0, comma)), line_no, "timestamp");
    if (!std::isfinite(ts) || ts < 0.0) {
      throw TraceParseError(line_no, "timestamp must be finite and >= 0");
    }
    if (ts < prev_ts) {
      throw TraceParseError(line_no, "non-monotone timestamp");
    }
    const std::uint64_t size =
        parse_uint_field(trim(line.substr(comma + 1)), line_no, "frame size");
    if (size < 1 || size > 65535) {
      throw TraceParseError(line_no, "size out of range (1..65535)");
    }
    records.push_back(TraceRecord{ts, static_cast<std::uint32_t>(size)});
    prev_ts = ts;
  }
  return records;
}

std::vector<TraceRecord> parse_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open trace file: " + path);
  }
  return parse_trace(in);
}

double load_to_lambda(double load_bps, double frame_bytes) {
  if (!(load_bps > 0.0) || !(frame_bytes > 0.0)) {
    throw std::domain_error("load_to_lambda: load and frame size must be > 0");
  }
  return load_bps / (8.0 * frame_bytes);
}

}  // namespace dmeee
