#include "dmeee/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmeee {
namespace {

// exp(-x) is still a normal double below this; above it the pmf terms are
// formed in the log domain.
constexpr double kLogDomainThreshold = 700.0;

void check_domain(int q, double x) {
  if (q < 1) {
    throw std::domain_error("regularized_upper_gamma: q must be >= 1");
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("regularized_upper_gamma: x must be >= 0");
  }
}

// Sum of Poisson(x) pmf over k = 0..q-1 with incremental term ratios.
double pmf_head_sum(int q, double x) {
  double term = std::exp(-x);
  double sum = term;
  for (int k = 1; k < q; ++k) {
    term *= x / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

// Same head sum accumulated in the log domain (running-max log-sum-exp).
double pmf_head_sum_log(int q, double x) {
  double log_term = -x;  // k = 0
  double max_log = log_term;
  double scaled_sum = 1.0;
  const double log_x = std::log(x);
  for (int k = 1; k < q; ++k) {
    log_term += log_x - std::log(static_cast<double>(k));
    if (log_term > max_log) {
      scaled_sum = scaled_sum * std::exp(max_log - log_term) + 1.0;
      max_log = log_term;
    } else {
      scaled_sum += std::exp(log_term - max_log);
    }
  }
  return std::exp(max_log + std::log(scaled_sum));
}

}  // namespace

double regularized_upper_gamma(int q, double x) {
  check_domain(q, x);
  if (x == 0.0) {
    return 1.0;
  }
  const double sum =
      (x < kLogDomainThreshold) ? pmf_head_sum(q, x) : pmf_head_sum_log(q, x);
  return std::clamp(sum, 0.0, 1.0);
}

double poisson_tail(int q, double x) {
  check_domain(q, x);
  if (x == 0.0) {
    return 0.0;
  }
  if (x >= static_cast<double>(q)) {
    // The head dominates; 1 - R loses nothing here.
    return std::clamp(1.0 - regularized_upper_gamma(q, x), 0.0, 1.0);
  }
  // Direct tail summation from k = q upward; term ratio x/(k+1) < 1 so the
  // series converges geometrically.
  double term = poisson_pmf(q, x);
  double sum = term;
  for (int k = q; term > sum * 1e-18 && term > 0.0; ++k) {
    term *= x / static_cast<double>(k + 1);
    sum += term;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double poisson_pmf(int k, double x) {
  if (k < 0) {
    throw std::domain_error("poisson_pmf: k must be >= 0");
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("poisson_pmf: x must be >= 0");
  }
  if (x == 0.0) {
    return k == 0 ? 1.0 : 0.0;
  }
  if (x < kLogDomainThreshold && k < 30) {
    double term = std::exp(-x);
    for (int i = 1; i <= k; ++i) {
      term *= x / static_cast<double>(i);
    }
    return term;
  }
  return std::exp(-x + k * std::log(x) - std::lgamma(static_cast<double>(k) + 1.0));
}

}  // namespace dmeee
