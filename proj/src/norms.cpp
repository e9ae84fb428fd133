#include "hamlim/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace hamlim {

namespace {

constexpr double kSlackFloor = 1e-12;
constexpr double kSlackTol = -1e-9;

ChainLink make_link(std::string name, double lhs, double rhs) {
  ChainLink link;
  link.name = std::move(name);
  link.lhs = lhs;
  link.rhs = rhs;
  const double denom = std::max({std::abs(lhs), std::abs(rhs), kSlackFloor});
  link.slack = (rhs - lhs) / denom;
  link.ok = link.slack >= kSlackTol;
  return link;
}

double max_column_norm(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::norm(h(i, j));
    best = std::max(best, sum);
  }
  return std::sqrt(best);
}

double induced_one_norm(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::abs(h(i, j));
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace

NormProfile norm_profile(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  NormProfile p;
  p.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t row_nonzeros = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double mag = std::abs(h(i, j));
      p.max_norm = std::max(p.max_norm, mag);
      if (h(i, j) != cplx(0.0)) ++row_nonzeros;
    }
    p.k = std::max(p.k, row_nonzeros);
  }
  p.mcn = max_column_norm(h);
  p.one_norm = induced_one_norm(h);
  p.spectral = spectral_norm(h);
  // For entrywise-nonnegative real matrices abs(H) == H, so the second
  // eigensolve is redundant.
  p.abs_spectral =
      entries_all_real_nonnegative(h) ? p.spectral : spectral_norm(abs_entrywise(h));
  return p;
}

ChainReport norm_chain_report(const HermitianMatrix& h) {
  ChainReport r;
  r.profile = norm_profile(h);
  const NormProfile& p = r.profile;
  const double sqrt_n = std::sqrt(static_cast<double>(p.n));
  const double n = static_cast<double>(p.n);

  r.general.push_back(make_link("max<=mcn", p.max_norm, p.mcn));
  r.general.push_back(make_link("mcn<=spectral", p.mcn, p.spectral));
  r.general.push_back(make_link("spectral<=abs_spectral", p.spectral, p.abs_spectral));
  r.general.push_back(make_link("abs_spectral<=one_norm", p.abs_spectral, p.one_norm));
  r.general.push_back(make_link("one_norm<=sqrtN*mcn", p.one_norm, sqrt_n * p.mcn));
  r.general.push_back(make_link("sqrtN*mcn<=N*max", sqrt_n * p.mcn, n * p.max_norm));

  const double sqrt_k = std::sqrt(static_cast<double>(p.k));
  const double k = static_cast<double>(p.k);
  r.sparse.push_back(make_link("max<=mcn", p.max_norm, p.mcn));
  r.sparse.push_back(make_link("mcn<=spectral", p.mcn, p.spectral));
  r.sparse.push_back(make_link("spectral<=abs_spectral", p.spectral, p.abs_spectral));
  r.sparse.push_back(make_link("abs_spectral<=one_norm", p.abs_spectral, p.one_norm));
  r.sparse.push_back(make_link("one_norm<=sqrtk*mcn", p.one_norm, sqrt_k * p.mcn));
  r.sparse.push_back(make_link("sqrtk*mcn<=k*max", sqrt_k * p.mcn, k * p.max_norm));

  const HermitianMatrix habs = abs_entrywise(h);
  r.mcn_abs_delta = std::abs(max_column_norm(habs) - p.mcn);
  r.one_norm_abs_delta = std::abs(induced_one_norm(habs) - p.one_norm);

  r.all_ok = r.mcn_abs_delta <= 1e-12 * std::max(1.0, p.mcn) &&
             r.one_norm_abs_delta <= 1e-12 * std::max(1.0, p.one_norm);
  for (const ChainLink& link : r.general) r.all_ok = r.all_ok && link.ok;
  for (const ChainLink& link : r.sparse) r.all_ok = r.all_ok && link.ok;
  return r;
}

WalkCostEstimate walk_cost_estimate(const NormProfile& profile, double t, double delta) {
  if (!(delta > 0.0) || delta > 1.0) {
    throw std::domain_error("walk_cost_estimate: delta must lie in (0, 1]");
  }
  if (!std::isfinite(t)) throw std::domain_error("walk_cost_estimate: t must be finite");
  WalkCostEstimate est;
  est.t = t;
  est.delta = delta;
  const double root = std::sqrt(delta);
  est.steps_abs = profile.abs_spectral * std::abs(t) / root;
  est.steps_one = profile.one_norm * std::abs(t) / root;
  return est;
}

WalkCostEstimate walk_cost_estimate(const HermitianMatrix& h, double t, double delta) {
  return walk_cost_estimate(norm_profile(h), t, delta);
}

}  // namespace hamlim
