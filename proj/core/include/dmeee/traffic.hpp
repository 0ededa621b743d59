#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmeee/types.hpp"

namespace dmeee {

struct Arrival {
  double time = 0.0;  // seconds
  double size_bytes = 0.0;
};

/// Pull-style arrival stream. A source instance is single-consumer.
class ArrivalSource {
 public:
  virtual ~ArrivalSource() = default;
  /// Next arrival, or std::nullopt at end of stream.
  virtual std::optional<Arrival> next() = 0;
};

/// Poisson arrivals with fixed frame size. Gaps are drawn by inverse-CDF on a
/// seeded 64-bit Mersenne Twister, so the stream is reproducible bit-for-bit
/// from the seed. Never ends.
class PoissonSource final : public ArrivalSource {
 public:
  PoissonSource(double lambda, double frame_bytes, std::uint64_t seed);
  std::optional<Arrival> next() override;

 private:
  double lambda_;
  double frame_bytes_;
  double clock_ = 0.0;
  std::mt19937_64 rng_;
};

/// Replays parsed trace records with an optional timestamp scale. Emitted
/// times strictly increase: a record that would not advance the clock (equal
/// timestamps, or sub-nanosecond inversions created by scaling) is emitted
/// 1 ns after its predecessor.
class TraceSource final : public ArrivalSource {
 public:
  explicit TraceSource(TraceHandle records, double scale = 1.0);
  std::optional<Arrival> next() override;

 private:
  TraceHandle records_;
  double scale_;
  std::size_t cursor_ = 0;
  double last_time_ = -1.0;
};

std::unique_ptr<ArrivalSource> make_source(const TrafficSpec& spec, std::uint64_t seed);

/// Parse failure with the 1-based line number embedded in the message.
class TraceParseError : public std::runtime_error {
 public:
  TraceParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads "timestamp_seconds,frame_bytes" lines; '#' starts a comment line and
/// blank lines are skipped. CRLF is accepted. Timestamps must be finite,
/// >= 0 and non-decreasing; sizes must be integers in 1..65535.
std::vector<TraceRecord> parse_trace(std::istream& input);
std::vector<TraceRecord> parse_trace_file(const std::string& path);

/// lambda = load / (8 * frame_bytes); load in bits/s, result in frames/s.
double load_to_lambda(double load_bps, double frame_bytes);

}  // namespace dmeee
