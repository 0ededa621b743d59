#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <memory>
#include <sstream>
#include <vector>

#include "dmeee/traffic.hpp"

using namespace dmeee;

namespace {

TraceHandle make_trace(std::vector<TraceRecord> recs) {
  return std::make_shared<const std::vector<TraceRecord>>(std::move(recs));
}

}  // namespace

TEST_SUITE("traffic") {

TEST_CASE("load_to_lambda") {
  CHECK(load_to_lambda(2e9, 1500.0) == doctest::Approx(166666.6667).epsilon(1e-9));
  CHECK(load_to_lambda(40e9, 1500.0) == doctest::Approx(3333333.333).epsilon(1e-9));
  // round trip
  const double lambda = load_to_lambda(7.25e9, 812.0);
  CHECK(lambda * 8.0 * 812.0 == doctest::Approx(7.25e9).epsilon(1e-14));
  CHECK_THROWS_AS(load_to_lambda(0.0, 1500.0), std::domain_error);
  CHECK_THROWS_AS(load_to_lambda(1e9, 0.0), std::domain_error);
}

TEST_CASE("poisson source matches the exponential law") {
  const double lambda = 1e6;
  PoissonSource src(lambda, 1500.0, 42);
  const std::size_t n = 1'000'000;
  double prev = 0.0;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = src.next();
    REQUIRE(a.has_value());
    const double gap = a->time - prev;
    prev = a->time;
    CHECK(gap >= 0.0);
    sum += gap;
    sum_sq += gap * gap;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  // Exponential: mean 1/lambda with SE 1/(lambda sqrt(n));
  // variance 1/lambda^2 with SE sqrt(8)/(lambda^2 sqrt(n)).
  CHECK(std::abs(mean - 1.0 / lambda) <= 3.0 / (lambda * std::sqrt(double(n))));
  CHECK(std::abs(var - 1.0 / (lambda * lambda)) <=
        3.0 * std::sqrt(8.0) / (lambda * lambda * std::sqrt(double(n))));
}

TEST_CASE("poisson source is reproducible from the seed") {
  PoissonSource a(5e5, 1500.0, 99), b(5e5, 1500.0, 99), c(5e5, 1500.0, 100);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    const double ta = a.next()->time;
    all_equal = all_equal && (ta == b.next()->time);
    any_diff = any_diff || (ta != c.next()->time);
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("parse_trace accepts comments, blanks and CRLF") {
  std::istringstream in("# comment\n\n0,1500\r\n1e-6,1500\n");
  const auto recs = parse_trace(in);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].timestamp == 0.0);
  CHECK(recs[0].size_bytes == 1500);
  CHECK(recs[1].timestamp == 1e-6);
  CHECK(recs[1].size_bytes == 1500);
}

TEST_CASE("parse_trace diagnostics carry line numbers") {
  {
    std::istringstream in("5e-6,0\n");
    CHECK_THROWS_WITH_AS(parse_trace(in), "line 1: size out of range (1..65535)",
                         TraceParseError);
  }
  {
    std::istringstream in("0,70000\n");
    CHECK_THROWS_AS(parse_trace(in), TraceParseError);
  }
  {
    std::istringstream in("1e-6,64\n0,64\n");
    try {
      parse_trace(in);
      FAIL("expected TraceParseError");
    } catch (const TraceParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("non-monotone") != std::string::npos);
    }
  }
  {
    std::istringstream in("# ok\nabc,64\n");
    try {
      parse_trace(in);
      FAIL("expected TraceParseError");
    } catch (const TraceParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  {
    std::istringstream in("0,64\n1e-6\n");
    CHECK_THROWS_AS(parse_trace(in), TraceParseError);
  }
  {
    std::istringstream in("-1e-6,64\n");
    CHECK_THROWS_AS(parse_trace(in), TraceParseError);
  }
}

TEST_CASE("trace replay echoes records") {
  std::istringstream in("0,1500\n300e-9,64\n");
  TraceSource src(make_trace(parse_trace(in)));
  auto a = src.next();
  REQUIRE(a.has_value());
  CHECK(a->time == 0.0);
  CHECK(a->size_bytes == 1500.0);
  auto b = src.next();
  REQUIRE(b.has_value());
  CHECK(b->time == 300e-9);
  CHECK(b->size_bytes == 64.0);
  CHECK(!src.next().has_value());  // end of stream
}

TEST_CASE("trace replay applies the time scale") {
  TraceSource src(make_trace({{0.0, 1500}, {300e-9, 64}}), 0.5);
  CHECK(src.next()->time == 0.0);
  CHECK(src.next()->time == doctest::Approx(150e-9).epsilon(1e-15));
}

TEST_CASE("equal timestamps are spaced by 1 ns") {
  TraceSource src(make_trace({{5e-6, 100}, {5e-6, 200}, {5e-6, 300}, {6e-6, 400}}));
  const double t0 = src.next()->time;
  const double t1 = src.next()->time;
  const double t2 = src.next()->time;
  const double t3 = src.next()->time;
  CHECK(t0 == 5e-6);
  CHECK(t1 == doctest::Approx(5e-6 + 1e-9).epsilon(1e-15));
  CHECK(t2 == doctest::Approx(5e-6 + 2e-9).epsilon(1e-15));
  CHECK(t3 == 6e-6);
  CHECK(t0 < t1);
  CHECK(t1 < t2);
  CHECK(t2 < t3);
}

TEST_CASE("trace replay preserves count and bytes") {
  std::vector<TraceRecord> recs;
  double total_bytes = 0.0;
  for (int i = 0; i < 500; ++i) {
    recs.push_back({i * 1e-6, static_cast<std::uint32_t>(64 + (i * 37) % 1400)});
    total_bytes += recs.back().size_bytes;
  }
  TraceSource src(make_trace(recs), 2.0);
  std::size_t count = 0;
  double bytes = 0.0;
  while (auto a = src.next()) {
    ++count;
    bytes += a->size_bytes;
  }
  CHECK(count == recs.size());
  CHECK(bytes == total_bytes);
}

TEST_CASE("make_source dispatches on kind") {
  auto poisson = make_source(TrafficSpec::poisson(1e6), 7);
  CHECK(poisson->next().has_value());
  auto trace = make_source(TrafficSpec::from_trace(make_trace({{0.0, 64}})), 7);
  CHECK(trace->next()->size_bytes == 64.0);
  CHECK(!trace->next().has_value());
  CHECK_THROWS_AS(make_source(TrafficSpec::poisson(-1.0), 7), std::invalid_argument);
  CHECK_THROWS_AS(make_source(TrafficSpec::from_trace(nullptr), 7), std::invalid_argument);
}

}  // TEST_SUITE
