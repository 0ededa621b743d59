#pragma once

namespace dmeee {

/// Regularized upper incomplete gamma function R(q, x) = Gamma(q, x) / Gamma(q)
/// for integer order q >= 1. Equals the probability that a Poisson(x) count is
/// below q. Stable at least up to q = 256, x = 1e4 (log-domain accumulation is
/// used once exp(-x) would underflow). Throws std::domain_error for q < 1 or
/// x < 0.
double regularized_upper_gamma(int q, double x);

/// Complement 1 - R(q, x) = Pr[Poisson(x) >= q], computed without cancellation
/// for x below q. Same domain requirements as regularized_upper_gamma.
double poisson_tail(int q, double x);

/// Poisson probability mass Pr[Poisson(x) = k], k >= 0, x >= 0.
double poisson_pmf(int k, double x);

}  // namespace dmeee
