#include "hamlim/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hamlim {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

HermitianMatrix::HermitianMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw std::invalid_argument("HermitianMatrix dimension must be positive");
}

HermitianMatrix HermitianMatrix::from_entries(std::size_t n, std::vector<cplx> entries,
                                              double asym_tol) {
  if (n == 0) throw std::invalid_argument("HermitianMatrix dimension must be positive");
  if (entries.size() != n * n) {
    throw std::invalid_argument("HermitianMatrix entry count does not match dimension");
  }
  for (const cplx& v : entries) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("HermitianMatrix entries must be finite");
    }
  }
  double max_asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      max_asym = std::max(max_asym, std::abs(entries[i * n + j] - std::conj(entries[j * n + i])));
    }
  }
  if (max_asym > asym_tol) {
    throw std::invalid_argument("matrix is not Hermitian: max asymmetry " +
                                std::to_string(max_asym) + " exceeds tolerance");
  }
  HermitianMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h.a_[i * n + i] = cplx(entries[i * n + i].real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (entries[i * n + j] + std::conj(entries[j * n + i]));
      h.a_[i * n + j] = v;
      h.a_[j * n + i] = std::conj(v);
    }
  }
  return h;
}

void HermitianMatrix::set(std::size_t i, std::size_t j, cplx v) {
  if (i >= n_ || j >= n_) throw std::out_of_range("HermitianMatrix::set index out of range");
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw std::invalid_argument("HermitianMatrix entries must be finite");
  }
  if (i == j) {
    if (v.imag() != 0.0) {
      throw std::invalid_argument("diagonal entries of a Hermitian matrix must be real");
    }
    a_[i * n_ + i] = v;
  } else {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = std::conj(v);
  }
}

double state_norm(const StateVector& psi) {
  double sum = 0.0;
  for (const cplx& a : psi) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector basis_state(std::size_t n, std::size_t j) {
  if (j >= n) throw std::out_of_range("basis_state index out of range");
  StateVector psi(n, 0.0);
  psi[j] = 1.0;
  return psi;
}

StateVector uniform_state(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_state needs a positive dimension");
  return StateVector(n, cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  const std::size_t n = na * nb;
  std::vector<cplx> entries(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0)) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          entries[(i * nb + k) * n + (j * nb + l)] = aij * b(k, l);
        }
      }
    }
  }
  return HermitianMatrix::from_entries(n, std::move(entries));
}

HermitianMatrix abs_entrywise(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  HermitianMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.set(i, j, cplx(std::abs(h(i, j)), 0.0));
    }
  }
  return out;
}

bool entries_all_real_nonnegative(const HermitianMatrix& h) {
  for (const cplx& v : h.data()) {
    if (v.imag() != 0.0 || v.real() < 0.0) return false;
  }
  return true;
}

}  // namespace hamlim
