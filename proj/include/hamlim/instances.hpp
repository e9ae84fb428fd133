#pragma once

#include <cstdint>

#include "hamlim/matrix.hpp"
#include "hamlim/rng.hpp"

namespace hamlim {

struct BitString {
  std::vector<std::uint8_t> bits;  // values in {0, 1}, nonempty
};

struct SignString {
  std::vector<int> signs;  // values in {-1, +1}, nonempty
};

int parity_of(const BitString& s);
int sign_sum(const SignString& s);
BitString parse_bit_string(const std::string& text);   // e.g. "01101"
SignString parse_sign_string(const std::string& text); // e.g. "+-++-"
BitString random_bit_string(std::size_t n, Rng& rng);
SignString random_sign_string(std::size_t m, Rng& rng);

// Path Hamiltonian on N+1 vertices with <i|H|i+1> = sqrt((N-i)(i+1))/N.
// Spectral norm 1; evolving |0> for t = pi*N/2 transfers it to |N>.
HermitianMatrix line_hamiltonian(std::size_t n);

// Two disjoint path graphs on basis |i,j>, index 2i+j, with
// <i,j|H|i+1,j^S_i> = sqrt((N-i)(i+1))/N. A permutation of H1 (+) H1, so the
// endpoint reached from |0,0> encodes the parity of S.
HermitianMatrix parity_hamiltonian(const BitString& s);

// Dense blow-up of the parity Hamiltonian on basis |i,j,k>, k = 0..N-1,
// index (2i+j)*N + k, with entries sqrt((N-i)(i+1))/N^2 between all copy
// pairs (k, k'). Equals kron(parity_hamiltonian(S), J/N) with J all-ones.
HermitianMatrix dense_parity_hamiltonian(const BitString& s, std::size_t dim_cap = 4096);

// Symmetric circulant on N = 2M+1 vertices with first row
// (0, s_1..s_M, s_M..s_1) and zero diagonal.
HermitianMatrix circulant_from_string(const SignString& s);

// Closed-form circulant eigenvalues lambda_r = 2 sum_j s_j cos(2 pi j r / N),
// so lambda_0 = 2 sum_j s_j. Satisfies lambda_r == lambda_{N-r} exactly.
struct CirculantSpectrum {
  std::vector<double> lambdas;
  double lambda0 = 0.0;
};

CirculantSpectrum circulant_spectrum(const SignString& s);
double circulant_spectral_norm(const SignString& s);  // max_r |lambda_r|

// n-fold tensor power of the 2x2 Hadamard matrix: entries +-2^{-n/2},
// spectral norm 1, abs(H) spectral norm 2^{n/2}. Capped at dimension 2^12.
HermitianMatrix hadamard_tensor(unsigned n);

// Named matrices that make each link of the norm chain tight.
enum class WitnessKind { identity, all_ones, hadamard };
HermitianMatrix saturating_witness(WitnessKind kind, std::size_t size);

}  // namespace hamlim
