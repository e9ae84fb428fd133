#pragma once

#include <stdexcept>

#include "hamlim/matrix.hpp"

namespace hamlim {

// Full eigendecomposition H = V diag(eigenvalues) V^dag. Eigenvalues are
// ascending with ties kept in the converged order; column k of eigenvectors
// pairs with eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

struct EighError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Householder tridiagonalization followed by implicit-shift QL (at most 50
// iterations per eigenvalue, else EighError). The result is checked against
// the reconstruction and unitarity tolerances before it is returned.
Spectrum eigh(const HermitianMatrix& h);

// Eigenvalues only, ascending. Skips the eigenvector accumulation, which
// makes norm computations several times cheaper.
std::vector<double> eigvalsh(const HermitianMatrix& h);

double spectral_norm(const HermitianMatrix& h);

// exp(-i H t) psi, computed exactly through the eigendecomposition.
StateVector evolve(const HermitianMatrix& h, double t, const StateVector& psi);
StateVector evolve(const Spectrum& spec, double t, const StateVector& psi);

// Dense unitary exp(-i H t); column j equals evolve(h, t, e_j).
ComplexMatrix expm_unitary(const HermitianMatrix& h, double t);

}  // namespace hamlim
