#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "dmeee/gamma.hpp"
#include "dmeee/traffic.hpp"

namespace dmeee::runner {
namespace {

using ordered_json = nlohmann::ordered_json;

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  if (n == 0) {
    return;
  }
  std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) {
        return;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

double student_t_half_width(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  if (n < 2) {
    return 0.0;
  }
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  const boost::math::students_t_distribution<double> dist(static_cast<double>(n - 1));
  return boost::math::quantile(dist, 0.975) * sd / std::sqrt(static_cast<double>(n));
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

CoalescingConfig coalescing(const ExperimentConfig& config, ThresholdPair t) {
  CoalescingConfig c;
  c.q_fast = t.qf;
  c.q_deep = t.qd;
  c.max_dwell = config.max_dwell_s;
  return c;
}

// Canonical emission order: loads ascending, thresholds by (qf, qd).
std::vector<double> sorted_loads(const ExperimentConfig& config) {
  auto loads = config.loads_gbps;
  std::sort(loads.begin(), loads.end());
  return loads;
}

std::vector<ThresholdPair> sorted_thresholds(const ExperimentConfig& config) {
  auto ts = config.thresholds;
  std::sort(ts.begin(), ts.end(), [](ThresholdPair a, ThresholdPair b) {
    return a.qf != b.qf ? a.qf < b.qf : a.qd < b.qd;
  });
  return ts;
}

void check_report_invariants(const SimReport& r) {
  const double parts = r.t_active_busy + r.t_fast + r.t_deep + r.t_transition;
  if (std::abs(parts - r.t_total) > 1e-9 * r.t_total) {
    throw std::logic_error("sim report: state times do not partition the horizon");
  }
  if (r.frames_in != r.frames_out + r.frames_remaining) {
    throw std::logic_error("sim report: frame conservation violated");
  }
}

struct SimMetrics {
  double phi = 0.0, delay = 0.0, rho_f = 0.0, rho_d = 0.0, p_d = 0.0;
};

SimMetrics metrics_of(const SimReport& r) {
  check_report_invariants(r);
  SimMetrics m;
  m.phi = r.phi_sim;
  m.delay = r.mean_queue_delay;
  m.rho_f = r.t_fast / r.t_total;
  m.rho_d = r.t_deep / r.t_total;
  m.p_d = r.p_deep_observed;
  return m;
}

ResultRow model_row(const ExperimentConfig& config, double load_gbps, ThresholdPair t) {
  ResultRow row;
  row.mode = "model";
  row.load_gbps = load_gbps;
  row.qf = t.qf;
  row.qd = t.qd;
  const double lambda = load_to_lambda(load_gbps * 1e9, config.frame_bytes);
  const double rho = lambda * config.profile.service_time(config.frame_bytes);
  if (rho >= 1.0) {
    row.unstable = true;
    return row;
  }
  const ModelBreakdown b = energy_ratio(config.profile, coalescing(config, t),
                                        TrafficSpec::poisson(lambda, config.frame_bytes));
  row.phi = b.phi;
  row.rho_f = b.rho_f;
  row.rho_d = b.rho_d;
  row.p_d = b.p_deep;
  return row;
}

void append_csv_value(std::string& out, const std::optional<double>& v) {
  if (v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", *v);
    out += buf;
  }
  out += ',';
}

ordered_json json_value(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

std::string format_point(double load, std::uint32_t qf, std::uint32_t qd) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "load=%g qf=%u qd=%u", load, qf, qd);
  return buf;
}

// E[(clamp(S_m - T, 0, U - T))^2] for S_m ~ Erlang(m, lambda). U may be
// infinite. Expanding (t - T)^2 against the Erlang density gives survival
// differences of orders m..m+2.
double erlang_excess_sq(int m, double lambda, double T, double U) {
  using dmeee::regularized_upper_gamma;
  const double xt = lambda * T;
  auto surv = [&](int k, double x) { return regularized_upper_gamma(k, x); };
  double r0 = surv(m, xt), r1 = surv(m + 1, xt), r2 = surv(m + 2, xt);
  double cap = 0.0;
  if (std::isfinite(U)) {
    const double xu = lambda * U;
    r0 -= surv(m, xu);
    r1 -= surv(m + 1, xu);
    r2 -= surv(m + 2, xu);
    const double span = U - T;
    cap = span * span * surv(m, xu);
  }
  const double md = static_cast<double>(m);
  const double integral = md * (md + 1.0) / (lambda * lambda) * r2 -
                          2.0 * T * md / lambda * r1 + T * T * r0;
  return std::max(integral, 0.0) + cap;
}

// Model-implied standard errors of the per-cycle estimators; used as floors
// when the plug-in standard error degenerates (all samples identical).
struct NullSe {
  double p = 0.0, tf = 0.0, td = 0.0;
};

NullSe model_implied_se(const PhyProfile& profile, const CoalescingConfig& cfg,
                        double lambda, double pd, double etf, double etd,
                        std::uint64_t n_cycles) {
  const double n = static_cast<double>(n_cycles);
  const double window = profile.t_atof + profile.t_idle;
  const int qf = static_cast<int>(cfg.q_fast);
  const int qd = static_cast<int>(cfg.q_deep);
  const double inf = std::numeric_limits<double>::infinity();

  const double tf_second_moment =
      erlang_excess_sq(qf, lambda, profile.t_atof, window);
  double td_second_moment = 0.0;
  for (int i = 0; i < qf; ++i) {
    const double weight = dmeee::poisson_pmf(i, lambda * window);
    if (weight == 0.0) continue;
    td_second_moment += weight * erlang_excess_sq(qd - i, lambda, profile.t_ftod, inf);
  }
  NullSe se;
  se.p = std::sqrt(std::max(pd * (1.0 - pd), 0.0) / n);
  se.tf = std::sqrt(std::max(tf_second_moment - etf * etf, 0.0) / n);
  se.td = std::sqrt(std::max(td_second_moment - etd * etd, 0.0) / n);
  return se;
}

void write_cycle_log(const std::string& path, const SimReport& report) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open cycle log for writing: " + path);
  }
  out << "cycle,start_s,end_s,t_fast_s,t_deep_s,t_transition_s,t_busy_s,"
         "entered_deep,frames_served\n";
  char buf[256];
  for (const CycleBreakdown& c : report.cycle_log) {
    std::snprintf(buf, sizeof buf, "%llu,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%d,%llu\n",
                  static_cast<unsigned long long>(c.index), c.start, c.end, c.t_fast,
                  c.t_deep, c.t_transition, c.t_busy, c.entered_deep ? 1 : 0,
                  static_cast<unsigned long long>(c.frames_served));
    out << buf;
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  profile.validate();
  if (thresholds.empty()) {
    throw std::invalid_argument("config: at least one (qf, qd) pair required");
  }
  for (ThresholdPair t : thresholds) {
    coalescing(*this, t).validate();
  }
  if (loads_gbps.empty()) {
    throw std::invalid_argument("config: at least one load required");
  }
  for (double l : loads_gbps) {
    if (!(l > 0.0) || !std::isfinite(l)) {
      throw std::invalid_argument("config: loads must be positive");
    }
  }
  if (!(horizon_s > 0.0) || !std::isfinite(horizon_s)) {
    throw std::invalid_argument("config: horizon must be > 0");
  }
  if (seeds.empty()) {
    throw std::invalid_argument("config: at least one seed required");
  }
  if (!(frame_bytes > 0.0)) {
    throw std::invalid_argument("config: frame_bytes must be > 0");
  }
  if (oracle_cycles < 1) {
    throw std::invalid_argument("config: oracle cycles must be >= 1");
  }
}

std::vector<ResultRow> run_sweep(const ExperimentConfig& config,
                                 const std::string& cycle_log_path) {
  config.validate();
  const auto loads = sorted_loads(config);
  const auto thresholds = sorted_thresholds(config);
  const bool want_model = config.mode != RunMode::sim;
  const bool want_sim = config.mode != RunMode::model;

  if (!cycle_log_path.empty() &&
      (!want_sim || loads.size() != 1 || thresholds.size() != 1 || config.seeds.size() != 1)) {
    throw std::invalid_argument(
        "cycle log requires sim mode with a single load, threshold pair and seed");
  }

  struct Point {
    double load;
    ThresholdPair thr;
    bool stable;
    std::vector<SimMetrics> reps;
  };
  std::vector<Point> points;
  for (double load : loads) {
    for (ThresholdPair t : thresholds) {
      const double lambda = load_to_lambda(load * 1e9, config.frame_bytes);
      const double rho = lambda * config.profile.service_time(config.frame_bytes);
      points.push_back({load, t, rho < 1.0, {}});
    }
  }

  if (want_sim) {
    const std::size_t reps = config.seeds.size();
    for (auto& p : points) p.reps.resize(p.stable ? reps : 0);
    std::vector<std::pair<std::size_t, std::size_t>> tasks;  // (point, rep)
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
      if (!points[pi].stable) continue;
      for (std::size_t ri = 0; ri < reps; ++ri) tasks.emplace_back(pi, ri);
    }
    parallel_for(tasks.size(), config.jobs, [&](std::size_t i) {
      auto [pi, ri] = tasks[i];
      Point& p = points[pi];
      const double lambda = load_to_lambda(p.load * 1e9, config.frame_bytes);
      SimOptions opts;
      opts.record_cycles = !cycle_log_path.empty();
      const SimReport report =
          simulate(config.profile, coalescing(config, p.thr),
                   TrafficSpec::poisson(lambda, config.frame_bytes), config.horizon_s,
                   config.seeds[ri], opts);
      p.reps[ri] = metrics_of(report);
      if (!cycle_log_path.empty()) {
        write_cycle_log(cycle_log_path, report);
      }
    });
  }

  std::vector<ResultRow> rows;
  for (const Point& p : points) {
    if (want_model) {
      rows.push_back(model_row(config, p.load, p.thr));
    }
    if (!want_sim) {
      continue;
    }
    ResultRow row;
    row.mode = "sim";
    row.load_gbps = p.load;
    row.qf = p.thr.qf;
    row.qd = p.thr.qd;
    if (!p.stable) {
      row.unstable = true;
      rows.push_back(row);
      continue;
    }
    std::vector<double> phis, delays, rho_fs, rho_ds, p_ds;
    for (const SimMetrics& m : p.reps) {
      phis.push_back(m.phi);
      delays.push_back(m.delay);
      rho_fs.push_back(m.rho_f);
      rho_ds.push_back(m.rho_d);
      p_ds.push_back(m.p_d);
    }
    row.phi = mean_of(phis);
    row.phi_ci = student_t_half_width(phis);
    row.delay_s = mean_of(delays);
    row.delay_ci = student_t_half_width(delays);
    row.rho_f = mean_of(rho_fs);
    row.rho_d = mean_of(rho_ds);
    row.p_d = mean_of(p_ds);
    if (config.seeds.size() == 1) {
      row.seed = config.seeds.front();
    }
    row.horizon_s = config.horizon_s;
    rows.push_back(row);
  }
  return rows;
}

std::vector<OracleRow> run_oracle(const ExperimentConfig& config) {
  config.validate();
  const auto loads = sorted_loads(config);
  const auto thresholds = sorted_thresholds(config);

  std::vector<OracleRow> rows;
  for (double load : loads) {
    for (ThresholdPair t : thresholds) {
      OracleRow row;
      row.load_gbps = load;
      row.qf = t.qf;
      row.qd = t.qd;
      rows.push_back(row);
    }
  }

  parallel_for(rows.size(), config.jobs, [&](std::size_t i) {
    OracleRow& row = rows[i];
    const double lambda = load_to_lambda(row.load_gbps * 1e9, config.frame_bytes);
    const CoalescingConfig cfg = coalescing(config, {row.qf, row.qd});
    const std::uint64_t seed = config.seeds.front() * 1000003ULL + i;
    row.est = estimate_cycle_quantities(config.profile, cfg,
                                        InterarrivalSampler::exponential(lambda),
                                        config.oracle_cycles, seed);
    row.p_deep_model = p_deep(config.profile, cfg, lambda);
    row.e_tf_model = expected_fast_wake(config.profile, cfg, lambda);
    row.e_td_model = expected_deep_sleep(config.profile, cfg, lambda);

    // The plug-in standard error degenerates when all samples coincide (rare
    // events at the grid edges); the model-implied estimator SE floors it.
    const NullSe null_se =
        model_implied_se(config.profile, cfg, lambda, row.p_deep_model,
                         row.e_tf_model, row.e_td_model, config.oracle_cycles);
    auto z = [](double diff, double se) {
      if (se <= 0.0) {
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      }
      return std::abs(diff) / se;
    };
    row.z_p_deep = z(row.est.p_deep_hat - row.p_deep_model,
                     std::max(row.est.p_deep_se, null_se.p));
    row.z_e_tf =
        z(row.est.e_tf_hat - row.e_tf_model, std::max(row.est.e_tf_se, null_se.tf));
    row.z_e_td =
        z(row.est.e_td_hat - row.e_td_model, std::max(row.est.e_td_se, null_se.td));
  });
  return rows;
}

ValidateReport run_validate(const ExperimentConfig& config) {
  ExperimentConfig both = config;
  both.mode = RunMode::both;
  both.validate();

  ValidateReport report;
  report.rows = run_sweep(both);

  // Rows come out model-then-sim per grid point.
  for (std::size_t i = 0; i + 1 < report.rows.size(); i += 2) {
    const ResultRow& model = report.rows[i];
    const ResultRow& sim = report.rows[i + 1];
    if (model.mode != "model" || sim.mode != "sim") {
      throw std::logic_error("validate: unexpected row order");
    }
    if (model.unstable || sim.unstable) {
      continue;
    }
    const double dev = std::abs(*model.phi - *sim.phi);
    if (dev > report.max_phi_dev) {
      report.max_phi_dev = dev;
      report.worst_phi_point = format_point(model.load_gbps, model.qf, model.qd);
    }
  }
  report.phi_pass = report.max_phi_dev <= kPhiTolerance;

  report.oracle_rows = run_oracle(both);
  for (const OracleRow& row : report.oracle_rows) {
    for (double zv : {row.z_p_deep, row.z_e_tf, row.z_e_td}) {
      if (zv > report.worst_abs_z) {
        report.worst_abs_z = zv;
        report.worst_z_point = format_point(row.load_gbps, row.qf, row.qd);
      }
    }
  }
  report.oracle_pass = report.worst_abs_z <= kOracleSigmas;

  char line[256];
  std::snprintf(line, sizeof line,
                "model vs simulation: max |phi_model - phi_sim| = %.6f at %s "
                "(tolerance %.3f) -> %s",
                report.max_phi_dev, report.worst_phi_point.c_str(), kPhiTolerance,
                report.phi_pass ? "PASS" : "FAIL");
  report.lines.emplace_back(line);
  std::snprintf(line, sizeof line,
                "closed forms vs renewal oracle: max |z| = %.3f at %s "
                "(limit %.1f standard errors) -> %s",
                report.worst_abs_z, report.worst_z_point.c_str(), kOracleSigmas,
                report.oracle_pass ? "PASS" : "FAIL");
  report.lines.emplace_back(line);
  return report;
}

std::vector<ResultRow> run_trace(const ExperimentConfig& config, const std::string& path,
                                 double rate_scale, std::optional<double> horizon_s,
                                 const std::string& cycle_log_path) {
  config.validate();
  if (!(rate_scale > 0.0) || !std::isfinite(rate_scale)) {
    throw std::invalid_argument("trace: rate scale must be > 0");
  }
  auto records = std::make_shared<const std::vector<TraceRecord>>(parse_trace_file(path));
  if (records->empty()) {
    throw std::runtime_error("trace: no records in " + path);
  }

  // One replay pass for the measured rate, the mean frame size and the span.
  std::size_t n = 0;
  double total_bytes = 0.0, last_time = 0.0;
  {
    TraceSource probe(records, rate_scale);
    while (auto a = probe.next()) {
      ++n;
      total_bytes += a->size_bytes;
      last_time = a->time;
    }
  }
  if (!(last_time > 0.0)) {
    throw std::runtime_error("trace: spans zero time; cannot infer an arrival rate");
  }
  const double mean_bytes = total_bytes / static_cast<double>(n);
  const double lambda_hat = static_cast<double>(n) / last_time;
  const double load_gbps = lambda_hat * 8.0 * mean_bytes / 1e9;

  const auto thresholds = sorted_thresholds(config);
  if (!cycle_log_path.empty() && thresholds.size() != 1) {
    throw std::invalid_argument("cycle log requires a single threshold pair");
  }
  const double horizon =
      horizon_s ? *horizon_s : last_time + config.profile.service_time(65535.0);

  struct TraceRun {
    SimMetrics metrics;
    SimReport report;
  };
  std::vector<TraceRun> runs(thresholds.size());
  parallel_for(thresholds.size(), config.jobs, [&](std::size_t i) {
    SimOptions opts;
    opts.record_cycles = !cycle_log_path.empty();
    runs[i].report = simulate(config.profile, coalescing(config, thresholds[i]),
                              TrafficSpec::from_trace(records, rate_scale), horizon,
                              config.seeds.front(), opts);
    runs[i].metrics = metrics_of(runs[i].report);
  });
  if (!cycle_log_path.empty()) {
    write_cycle_log(cycle_log_path, runs.front().report);
  }

  ExperimentConfig model_config = config;
  model_config.frame_bytes = mean_bytes;
  std::vector<ResultRow> rows;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    rows.push_back(model_row(model_config, load_gbps, thresholds[i]));
    ResultRow row;
    row.mode = "sim";
    row.load_gbps = load_gbps;
    row.qf = thresholds[i].qf;
    row.qd = thresholds[i].qd;
    const SimMetrics& m = runs[i].metrics;
    row.phi = m.phi;
    row.delay_s = m.delay;
    row.rho_f = m.rho_f;
    row.rho_d = m.rho_d;
    row.p_d = m.p_d;
    row.horizon_s = horizon;
    rows.push_back(row);
  }
  return rows;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out = "mode,load_gbps,qf,qd,phi,phi_ci,delay_s,delay_ci,rho_f,rho_d,p_d,seed,horizon_s\n";
  char buf[64];
  for (const ResultRow& r : rows) {
    out += r.mode;
    out += ',';
    std::snprintf(buf, sizeof buf, "%.9g,%u,%u,", r.load_gbps, r.qf, r.qd);
    out += buf;
    if (r.unstable) {
      out += "unstable,,,,,,,,\n";
      continue;
    }
    append_csv_value(out, r.phi);
    append_csv_value(out, r.phi_ci);
    append_csv_value(out, r.delay_s);
    append_csv_value(out, r.delay_ci);
    append_csv_value(out, r.rho_f);
    append_csv_value(out, r.rho_d);
    append_csv_value(out, r.p_d);
    if (r.seed) {
      std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(*r.seed));
      out += buf;
    }
    out += ',';
    if (r.horizon_s) {
      std::snprintf(buf, sizeof buf, "%.9g", *r.horizon_s);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<ResultRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const ResultRow& r : rows) {
    ordered_json obj;
    obj["mode"] = r.mode;
    obj["load_gbps"] = r.load_gbps;
    obj["qf"] = r.qf;
    obj["qd"] = r.qd;
    if (r.unstable) {
      obj["phi"] = "unstable";
      for (const char* k : {"phi_ci", "delay_s", "delay_ci", "rho_f", "rho_d", "p_d"}) {
        obj[k] = nullptr;
      }
    } else {
      obj["phi"] = json_value(r.phi);
      obj["phi_ci"] = json_value(r.phi_ci);
      obj["delay_s"] = json_value(r.delay_s);
      obj["delay_ci"] = json_value(r.delay_ci);
      obj["rho_f"] = json_value(r.rho_f);
      obj["rho_d"] = json_value(r.rho_d);
      obj["p_d"] = json_value(r.p_d);
    }
    if (r.seed) {
      obj["seed"] = *r.seed;
    } else {
      obj["seed"] = nullptr;
    }
    obj["horizon_s"] = r.unstable ? ordered_json(nullptr) : json_value(r.horizon_s);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<OracleRow>& rows) {
  std::string out =
      "load_gbps,qf,qd,cycles,seed,p_deep_hat,p_deep_se,e_tf_hat,e_tf_se,"
      "e_td_hat,e_td_se,p_deep_model,e_tf_model,e_td_model,z_p_deep,z_e_tf,z_e_td\n";
  char buf[512];
  for (const OracleRow& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%.9g,%u,%u,%llu,%llu,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,"
                  "%.9g,%.9g,%.9g\n",
                  r.load_gbps, r.qf, r.qd,
                  static_cast<unsigned long long>(r.est.n_cycles),
                  static_cast<unsigned long long>(r.est.rng_seed), r.est.p_deep_hat,
                  r.est.p_deep_se, r.est.e_tf_hat, r.est.e_tf_se, r.est.e_td_hat,
                  r.est.e_td_se, r.p_deep_model, r.e_tf_model, r.e_td_model, r.z_p_deep,
                  r.z_e_tf, r.z_e_td);
    out += buf;
  }
  return out;
}

std::string to_json(const std::vector<OracleRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const OracleRow& r : rows) {
    ordered_json obj;
    obj["load_gbps"] = r.load_gbps;
    obj["qf"] = r.qf;
    obj["qd"] = r.qd;
    obj["cycles"] = r.est.n_cycles;
    obj["seed"] = r.est.rng_seed;
    obj["p_deep_hat"] = r.est.p_deep_hat;
    obj["p_deep_se"] = r.est.p_deep_se;
    obj["e_tf_hat"] = r.est.e_tf_hat;
    obj["e_tf_se"] = r.est.e_tf_se;
    obj["e_td_hat"] = r.est.e_td_hat;
    obj["e_td_se"] = r.est.e_td_se;
    obj["p_deep_model"] = r.p_deep_model;
    obj["e_tf_model"] = r.e_tf_model;
    obj["e_td_model"] = r.e_td_model;
    obj["z_p_deep"] = r.z_p_deep;
    obj["z_e_tf"] = r.z_e_tf;
    obj["z_e_td"] = r.z_e_td;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace dmeee::runner
