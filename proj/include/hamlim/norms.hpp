#pragma once

#include <string>

#include "hamlim/eigh.hpp"
#include "hamlim/matrix.hpp"

namespace hamlim {

// The five size measures of a Hermitian matrix plus dimension and row
// sparsity. They always satisfy
//   max_norm <= mcn <= spectral <= abs_spectral <= one_norm
//                                  <= sqrt(n) * mcn <= n * max_norm,
// with sqrt(k) and k replacing sqrt(n) and n for k-sparse rows.
struct NormProfile {
  std::size_t n = 0;
  std::size_t k = 0;  // max nonzero entries per row
  double max_norm = 0.0;
  double mcn = 0.0;           // max Euclidean column norm
  double spectral = 0.0;      // largest |eigenvalue|
  double abs_spectral = 0.0;  // spectral norm of abs(H)
  double one_norm = 0.0;      // max absolute column sum
};

NormProfile norm_profile(const HermitianMatrix& h);

struct ChainLink {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // (rhs - lhs) / max(|lhs|, |rhs|, 1e-12)
  bool ok = false;     // slack >= -1e-9
};

struct ChainReport {
  NormProfile profile;
  std::vector<ChainLink> general;  // full inequality chain with sqrt(N), N
  std::vector<ChainLink> sparse;   // same chain with sqrt(k), k
  double mcn_abs_delta = 0.0;      // |mcn(abs(H)) - mcn(H)|
  double one_norm_abs_delta = 0.0; // | ||H||_1 - ||abs(H)||_1 |
  bool all_ok = false;
};

ChainReport norm_chain_report(const HermitianMatrix& h);

// Discrete-walk step estimates for simulating exp(-i H t) to error delta:
// ||abs(Ht)|| / sqrt(delta) steps, or ||Ht||_1 / sqrt(delta) with the easier
// to implement walk. The first never exceeds the second.
struct WalkCostEstimate {
  double t = 0.0;
  double delta = 0.0;
  double steps_abs = 0.0;
  double steps_one = 0.0;
};

WalkCostEstimate walk_cost_estimate(const NormProfile& profile, double t, double delta);
WalkCostEstimate walk_cost_estimate(const HermitianMatrix& h, double t, double delta);

}  // namespace hamlim
