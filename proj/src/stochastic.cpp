#include "hamlim/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hamlim/rng.hpp"

namespace hamlim {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// max_r |lambda_r| from the closed form, with a shared mirrored cosine table.
double circulant_norm_from_signs(const std::vector<int>& signs,
                                 const std::vector<double>& cos_table) {
  const std::size_t m = signs.size();
  const std::size_t n = 2 * m + 1;
  double best = 0.0;
  // lambda_r == lambda_{N-r}, so r = 0..M covers the whole spectrum.
  for (std::size_t r = 0; r <= m; ++r) {
    double acc = 0.0;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < m; ++j) {
      idx += r;
      if (idx >= n) idx -= n;
      acc += signs[j] > 0 ? cos_table[idx] : -cos_table[idx];
    }
    best = std::max(best, std::abs(2.0 * acc));
  }
  return best;
}

std::vector<double> mirrored_cos_table(std::size_t n) {
  std::vector<double> table(n);
  for (std::size_t idx = 0; idx <= n / 2; ++idx) {
    table[idx] = std::cos(2.0 * kPi * static_cast<double>(idx) / static_cast<double>(n));
    if (idx != 0) table[n - idx] = table[idx];
  }
  return table;
}

}  // namespace

PromiseConfig promise_config(std::size_t m, std::size_t b) {
  if (m < 1 || b < 1) throw std::invalid_argument("promise config needs M >= 1 and B >= 1");
  if (b > m) throw std::invalid_argument("promise bound B cannot exceed M");
  if ((b % 2) != (m % 2)) {
    throw std::invalid_argument("promise bound B must have the parity of M");
  }
  PromiseConfig cfg;
  cfg.m = m;
  cfg.b = b;
  cfg.tau = kPi / (4.0 * static_cast<double>(b));
  return cfg;
}

PromiseConfig derive_promise_bound(std::size_t m) {
  if (m < 2) throw std::invalid_argument("derive_promise_bound needs M >= 2");
  const double target = std::sqrt(static_cast<double>(m) * std::log(static_cast<double>(m)));
  std::size_t b = static_cast<std::size_t>(std::llround(target));
  if (b < 1) b = 1;
  if ((b % 2) != (m % 2)) b += 1;
  b = std::min(b, m);
  return promise_config(m, b);
}

SignString sample_promise_string(const PromiseConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const int majority_sign = rng.next_sign();
  const std::size_t majority_count = (cfg.m + cfg.b) / 2;

  // Partial Fisher-Yates selects a uniform majority-position subset.
  std::vector<std::size_t> positions(cfg.m);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  for (std::size_t i = 0; i < majority_count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next_below(cfg.m - i));
    std::swap(positions[i], positions[j]);
  }

  SignString s;
  s.signs.assign(cfg.m, -majority_sign);
  for (std::size_t i = 0; i < majority_count; ++i) s.signs[positions[i]] = majority_sign;
  return s;
}

TailReport tail_estimate(std::size_t m, double d, std::size_t trials, std::uint64_t seed) {
  if (m < 1 || trials < 1) throw std::invalid_argument("tail_estimate needs M >= 1, trials >= 1");
  if (!(d > 0.0)) throw std::invalid_argument("tail_estimate needs d > 0");
  const std::size_t n = 2 * m + 1;
  const std::vector<double> cos_table = mirrored_cos_table(n);

  TailReport r;
  r.m = m;
  r.d = d;
  r.trials = trials;
  r.seed = seed;
  const double mlogm = static_cast<double>(m) * std::log(static_cast<double>(m));
  r.threshold = 4.0 * d * std::sqrt(mlogm);

  std::vector<int> signs(m);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    for (int& v : signs) v = rng.next_sign();
    if (circulant_norm_from_signs(signs, cos_table) >= r.threshold) ++r.exceed_count;
  }
  r.empirical_prob = static_cast<double>(r.exceed_count) / static_cast<double>(trials);
  const double log_m = std::log(static_cast<double>(m));
  r.bound_lemma = 4.0 * std::exp(-(2.0 * d * d - 1.0) * log_m);
  r.bound_union = 2.0 * static_cast<double>(n) * std::exp(-2.0 * d * d * log_m);
  r.std_err = std::sqrt(r.empirical_prob * (1.0 - r.empirical_prob) /
                        static_cast<double>(trials));
  return r;
}

TailReport single_eigenvalue_tail(std::size_t m, double d, std::size_t r_index,
                                  std::size_t trials, std::uint64_t seed) {
  if (m < 1 || trials < 1) throw std::invalid_argument("tail needs M >= 1, trials >= 1");
  const std::size_t n = 2 * m + 1;
  if (r_index >= n) throw std::out_of_range("eigenvalue index out of range");
  const std::vector<double> cos_table = mirrored_cos_table(n);

  TailReport r;
  r.m = m;
  r.d = d;
  r.trials = trials;
  r.seed = seed;
  const double mlogm = static_cast<double>(m) * std::log(static_cast<double>(m));
  r.threshold = 4.0 * d * std::sqrt(mlogm);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    double acc = 0.0;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < m; ++j) {
      idx += r_index;
      if (idx >= n) idx -= n;
      acc += rng.next_sign() > 0 ? cos_table[idx] : -cos_table[idx];
    }
    if (std::abs(2.0 * acc) >= r.threshold) ++r.exceed_count;
  }
  r.empirical_prob = static_cast<double>(r.exceed_count) / static_cast<double>(trials);
  const double log_m = std::log(static_cast<double>(m));
  r.bound_lemma = 2.0 * std::exp(-2.0 * d * d * log_m);
  r.bound_union = r.bound_lemma;
  r.std_err = std::sqrt(r.empirical_prob * (1.0 - r.empirical_prob) /
                        static_cast<double>(trials));
  return r;
}

double hoeffding_bound(std::size_t m, double t,
                       const std::vector<std::pair<double, double>>& ranges) {
  if (!(t > 0.0)) throw std::domain_error("hoeffding_bound needs t > 0");
  if (ranges.size() != m) throw std::invalid_argument("hoeffding_bound range count mismatch");
  double denom = 0.0;
  for (const auto& [a, b] : ranges) {
    if (b < a) throw std::invalid_argument("hoeffding_bound needs b_j >= a_j");
    denom += (b - a) * (b - a);
  }
  if (denom == 0.0) {
    throw std::domain_error("hoeffding_bound: all ranges degenerate (division by zero)");
  }
  const double md = static_cast<double>(m);
  return std::exp(-2.0 * md * md * t * t / denom);
}

PromiseProbability promise_probability(std::size_t m, std::size_t b) {
  if (m < 1 || b < 1 || b > m) throw std::invalid_argument("promise_probability needs 1 <= B <= M");
  if ((b % 2) != (m % 2)) {
    throw std::invalid_argument("promise_probability: B must have the parity of M");
  }
  PromiseProbability p;
  p.m = m;
  p.b = b;

  BigUint numerator = BigUint::binomial(m, (m + b) / 2);
  numerator *= 2;
  // Denominator 2^M; cancel the shared power of two.
  const std::size_t cancel = std::min(numerator.trailing_zero_bits(), m);
  numerator.shift_right(cancel);
  p.numerator = std::move(numerator);
  p.denominator = BigUint::power_of_two(m - cancel);

  long num_exp = 0, den_exp = 0;
  const double num_mant = p.numerator.to_double_scaled(num_exp);
  const double den_mant = p.denominator.to_double_scaled(den_exp);
  p.exact_value = std::ldexp(num_mant / den_mant, static_cast<int>(num_exp - den_exp));

  const double md = static_cast<double>(m);
  const double bd = static_cast<double>(b);
  p.asymptotic = 2.0 * std::exp(-bd * bd / (2.0 * md)) / std::sqrt(kPi * md / 2.0);
  return p;
}

AdversaryReport adversary_bound(std::size_t m, std::size_t b) {
  if (m < 2 || b < 2 || b > m || m % 2 != 0 || b % 2 != 0) {
    throw std::invalid_argument("adversary_bound needs even M and even B with 2 <= B <= M");
  }
  AdversaryReport r;
  r.m_len = m;
  r.b = b;
  const std::uint64_t half = static_cast<std::uint64_t>(m / 2 + b / 2);
  r.m_count = BigUint::binomial(half, b);
  r.l_count = BigUint::binomial(half - 1, b - 1);

  // The ratio collapses to (M/B + 1)/2 == (M + B) / (2B); the big-integer
  // cross product confirms the reduction.
  std::uint64_t num = m + b;
  std::uint64_t den = 2 * static_cast<std::uint64_t>(b);
  const std::uint64_t g = gcd_u64(num, den);
  num /= g;
  den /= g;
  BigUint lhs = r.m_count;
  lhs *= den;
  BigUint rhs = r.l_count;
  rhs *= num;
  if (!(lhs == rhs)) throw std::logic_error("adversary ratio identity failed");
  r.ratio_num = num;
  r.ratio_den = den;
  r.lower_bound = static_cast<double>(num) / static_cast<double>(den);
  r.counting_queries = 2.0 * static_cast<double>(m) / static_cast<double>(b);
  return r;
}

AverageCaseReport average_case_bound(std::size_t m, double c, double d) {
  if (m < 2) throw std::domain_error("average_case_bound needs M >= 2");
  if (!(c > 0.0) || !(d > 0.0)) throw std::domain_error("average_case_bound needs c > 0, d > 0");

  const PromiseConfig cfg = derive_promise_bound(m);
  const PromiseProbability prob = promise_probability(m, cfg.b);

  AverageCaseReport r;
  r.m = m;
  r.c = c;
  r.d = d;
  r.b = cfg.b;
  r.tau = cfg.tau;

  const double md = static_cast<double>(m);
  const double log_m = std::log(md);
  r.term1_pi = std::pow(kPi * d * log_m, c);
  r.term1 = std::pow(d * log_m, c);

  // Conditional tail Pr(||H|| large | promise) <= Pr(||H|| large) / Pr(promise),
  // evaluated in logs so large exponents cannot overflow.
  const double log_union = std::log(2.0 * (2.0 * md + 1.0)) - 2.0 * d * d * log_m;
  const double log_ratio = log_union - std::log(prob.exact_value);
  r.p_large = log_ratio >= 0.0 ? 1.0 : std::exp(log_ratio);

  r.term2 = r.p_large * std::pow(2.0 * md * cfg.tau * log_m, c);
  r.total = r.term1 + r.term2;
  r.lower_bound = std::sqrt(md / log_m);
  r.term1_dominates = r.term2 <= r.term1;
  r.exponent_condition = 2.0 * d * d > c / 2.0 + 2.0;
  r.below_lower_bound = r.total < r.lower_bound;
  return r;
}

}  // namespace hamlim
