#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hamlim {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. General carrier for unitaries and
// eigenvector bases.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t dim() const { return n_; }
  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::vector<cplx>& data() { return a_; }
  const std::vector<cplx>& data() const { return a_; }

  static ComplexMatrix identity(std::size_t n);

private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

// Hermitian matrix whose storage satisfies H[j][i] == conj(H[i][j]) exactly.
// Mutation goes through set(), which writes both mirror entries; externally
// produced data goes through from_entries(), which symmetrizes input whose
// maximum asymmetry is at most asym_tol and rejects anything worse.
class HermitianMatrix {
public:
  explicit HermitianMatrix(std::size_t n);

  static HermitianMatrix from_entries(std::size_t n, std::vector<cplx> entries,
                                      double asym_tol = 1e-12);

  std::size_t dim() const { return n_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  // Stores v at (i, j) and conj(v) at (j, i); requires a real value on the
  // diagonal and finite components everywhere.
  void set(std::size_t i, std::size_t j, cplx v);

  const std::vector<cplx>& data() const { return a_; }

private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

using StateVector = std::vector<cplx>;

double state_norm(const StateVector& psi);
StateVector basis_state(std::size_t n, std::size_t j);
StateVector uniform_state(std::size_t n);

// Standard tensor product: (A (x) B)[i*nB+k][j*nB+l] = A[i][j] * B[k][l].
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);

// abs(H)_jk = |H_jk|.
HermitianMatrix abs_entrywise(const HermitianMatrix& h);

bool entries_all_real_nonnegative(const HermitianMatrix& h);

}  // namespace hamlim
