#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hamlim/instances.hpp"
#include "hamlim/matrix.hpp"
#include "hamlim/stochastic.hpp"

namespace hamlim {

// Black box returning the phase H_ij / |H_ij| of a matrix entry (1 when the
// entry vanishes). Counts matrix queries, and for a circulant backing also
// the induced string lookups: off-diagonal queries cost one lookup of s,
// diagonal queries cost none.
class CountedPhaseOracle {
public:
  static CountedPhaseOracle for_matrix(const HermitianMatrix& h);
  static CountedPhaseOracle for_circulant(const SignString& s);

  cplx query(std::size_t i, std::size_t j);
  std::size_t dim() const { return n_; }
  std::size_t matrix_queries() const { return matrix_queries_; }
  std::size_t string_queries() const { return string_queries_; }

private:
  CountedPhaseOracle() = default;
  std::optional<HermitianMatrix> matrix_;
  std::optional<SignString> signs_;
  std::size_t n_ = 0;
  std::size_t matrix_queries_ = 0;
  std::size_t string_queries_ = 0;
};

struct ExperimentReport {
  std::string name;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> inputs;
  std::map<std::string, double> metrics;
  bool pass = false;
  double wall_time_seconds = 0.0;  // informational, excluded from canonical output
};

// Parity read-out through the dense Hamiltonian: evolve the uniform
// superposition of |0,0,k> for t = pi*N/2, read which endpoint block carries
// the probability, and verify the copy-uniform invariant subspace against
// the two-line dynamics.
struct ParityResult {
  int parity = 0;
  double fidelity = 0.0;
  double subspace_deviation = 0.0;    // vs the reduced two-line evolution
  double k_marginal_deviation = 0.0;  // spread across copies within a block
  ExperimentReport report;
};

ParityResult parity_experiment(const BitString& s, std::size_t dim_cap = 4096);

// Sign of lambda_0 via tau-evolution of the circulant: the uniform state is
// an exact eigenvector, so its overlap after time tau = pi/(4B) is -+i and
// the imaginary part gives the sign. The run is repeated through a counted
// phase oracle plus structural data to account string queries.
struct SignDetectionResult {
  int sign = 0;
  double phase_error = 0.0;      // |overlap - expected eigenphase|
  double magnitude_error = 0.0;  // | |overlap| - 1 |
  std::size_t matrix_queries = 0;
  std::size_t string_queries = 0;
  ExperimentReport report;
};

SignDetectionResult sign_detection_experiment(const SignString& s, const PromiseConfig& cfg);

// Constant-time rewind witness: the Hadamard tensor power returns to the
// identity at tau = 2 pi although abs(H) has spectral norm 2^{n/2}.
struct FastForwardResult {
  double max_deviation_from_identity = 0.0;
  double spectral = 0.0;
  double abs_spectral = 0.0;
  ExperimentReport report;
};

FastForwardResult fastforward_witness(unsigned n, double tau);

}  // namespace hamlim
