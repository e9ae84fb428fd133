#pragma once

#include <cstdint>
#include <utility>

#include "hamlim/bigint.hpp"
#include "hamlim/instances.hpp"

namespace hamlim {

// Promise parameters for length-M sign strings: the string sum is promised
// to be -B or +B, and tau = pi/(4B) makes the distinguished eigenphase
// exactly -+i. B is the integer nearest sqrt(M ln M), parity-adjusted to
// match M so the promise set is nonempty.
struct PromiseConfig {
  std::size_t m = 0;
  std::size_t b = 0;
  double tau = 0.0;
};

PromiseConfig derive_promise_bound(std::size_t m);
PromiseConfig promise_config(std::size_t m, std::size_t b);

// Uniform sample from the promise set: a fair coin for the sign of the sum,
// then a uniform choice of the (M+B)/2 majority positions.
SignString sample_promise_string(const PromiseConfig& cfg, std::uint64_t seed);

// Monte Carlo tail of the circulant spectral norm over uniform sign strings,
// against the analytic tails 4/M^{2d^2-1} and 2N/M^{2d^2} at the threshold
// 4 d sqrt(M ln M).
struct TailReport {
  std::size_t m = 0;
  double d = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double threshold = 0.0;
  std::size_t exceed_count = 0;
  double empirical_prob = 0.0;
  double bound_lemma = 0.0;  // 4 / M^{2d^2 - 1}
  double bound_union = 0.0;  // 2 N / M^{2d^2}, N = 2M + 1
  double std_err = 0.0;      // sqrt(p(1-p)/trials)
};

TailReport tail_estimate(std::size_t m, double d, std::size_t trials, std::uint64_t seed);

// Same experiment for one fixed eigenvalue index r; the analytic tail is
// 2 / M^{2d^2}.
TailReport single_eigenvalue_tail(std::size_t m, double d, std::size_t r, std::size_t trials,
                                  std::uint64_t seed);

// exp(-2 M^2 t^2 / sum_j (b_j - a_j)^2) for independent X_j in [a_j, b_j].
double hoeffding_bound(std::size_t m, double t,
                       const std::vector<std::pair<double, double>>& ranges);

// Probability that a uniform length-M sign string sums to -B or +B:
// exactly 2 C(M, (M+B)/2) / 2^M as a reduced fraction, and the Gaussian
// binomial approximation 2 exp(-B^2/(2M)) / sqrt(pi M / 2).
struct PromiseProbability {
  std::size_t m = 0;
  std::size_t b = 0;
  BigUint numerator;
  BigUint denominator;  // a power of two after reduction
  double exact_value = 0.0;
  double asymptotic = 0.0;
};

PromiseProbability promise_probability(std::size_t m, std::size_t b);

// Adversary quantities for distinguishing sum -B from +B:
// m = C(M/2 + B/2, B), l = C(M/2 + B/2 - 1, B - 1), whose ratio reduces to
// (M/B + 1)/2, plus the matching counting-algorithm estimate of 2M/B queries.
struct AdversaryReport {
  std::size_t m_len = 0;  // M
  std::size_t b = 0;      // B
  BigUint m_count;
  BigUint l_count;
  std::uint64_t ratio_num = 0;  // reduced ratio m/l
  std::uint64_t ratio_den = 0;
  double lower_bound = 0.0;       // ratio as a real number
  double counting_queries = 0.0;  // 2M/B
};

AdversaryReport adversary_bound(std::size_t m, std::size_t b);

// Average-case query count of a hypothetical (||Ht|| log M)^c-query
// simulation over the promise set, split into the typical-norm term and the
// rare large-norm term, compared against the sqrt(M / ln M) lower bound.
struct AverageCaseReport {
  std::size_t m = 0;
  double c = 0.0;
  double d = 0.0;
  std::size_t b = 0;
  double tau = 0.0;
  double term1_pi = 0.0;  // (pi d ln M)^c, every constant kept
  double term1 = 0.0;     // (d ln M)^c, the pi/4 * 4 factor absorbed
  double p_large = 0.0;   // min(1, union tail / exact promise probability)
  double term2 = 0.0;     // p_large * (2M * tau * ln M)^c
  double total = 0.0;     // term1 + term2
  double lower_bound = 0.0;
  bool term1_dominates = false;
  bool exponent_condition = false;  // 2 d^2 > c/2 + 2
  bool below_lower_bound = false;   // total < lower_bound
};

AverageCaseReport average_case_bound(std::size_t m, double c, double d);

}  // namespace hamlim
