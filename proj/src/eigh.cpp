#include "hamlim/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hamlim {

namespace {

constexpr int kMaxQlIterations = 50;       // per eigenvalue
constexpr double kResidualTol = 1e-10;     // times n * ||H||
constexpr double kUnitarityTol = 1e-10;

struct Tridiagonal {
  std::vector<double> d;  // diagonal
  std::vector<double> e;  // subdiagonal, e[k] couples k and k+1
};

// Unitary reduction A -> Q^dag A Q with Q accumulated when requested.
// The reflectors and the final diagonal phase scaling make the subdiagonal
// real, so the QL stage can run in real arithmetic.
Tridiagonal tridiagonalize(const HermitianMatrix& h, ComplexMatrix* q_out) {
  const std::size_t n = h.dim();
  std::vector<cplx> a(h.data());
  auto at = [&a, n](std::size_t i, std::size_t j) -> cplx& { return a[i * n + j]; };

  std::vector<std::vector<cplx>> reflectors(n >= 2 ? n - 2 : 0);

  // Scaled Euclidean norm; reflector columns can reach denormal magnitudes
  // where squaring entries outright would destroy the unit-norm property.
  const auto scaled_norm = [](const std::vector<cplx>& x) {
    double xmax = 0.0;
    for (const cplx& v : x) {
      xmax = std::max({xmax, std::abs(v.real()), std::abs(v.imag())});
    }
    if (xmax == 0.0) return 0.0;
    double sum = 0.0;
    for (const cplx& v : x) sum += std::norm(v / xmax);
    return xmax * std::sqrt(sum);
  };

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    std::vector<cplx> u(m);
    for (std::size_t i = 0; i < m; ++i) u[i] = at(k + 1 + i, k);
    const double xnorm = scaled_norm(u);
    if (xnorm == 0.0) continue;

    const cplx x0 = u[0];
    const cplx phase = (x0 == cplx(0.0)) ? cplx(1.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * xnorm;
    u[0] -= alpha;

    // Two-stage normalization: dividing by the largest component first keeps
    // the reflector exactly unit norm even at denormal column scales, where
    // a single reciprocal of the norm would overflow.
    double umax = 0.0;
    for (const cplx& v : u) umax = std::max({umax, std::abs(v.real()), std::abs(v.imag())});
    if (umax == 0.0) continue;
    for (cplx& v : u) v /= umax;
    double unorm2 = 0.0;
    for (const cplx& v : u) unorm2 += std::norm(v);
    const double unorm = std::sqrt(unorm2);
    for (cplx& v : u) v /= unorm;

    // Hermitian rank-2 update of the trailing block: A <- A - w u^dag - u w^dag
    // with p = A u and w = 2p - 2(u^dag p)u.
    std::vector<cplx> p(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const cplx* row = &a[(k + 1 + i) * n + (k + 1)];
      cplx acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += row[j] * u[j];
      p[i] = acc;
    }
    cplx udp = 0.0;
    for (std::size_t i = 0; i < m; ++i) udp += std::conj(u[i]) * p[i];
    std::vector<cplx> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = 2.0 * p[i] - 2.0 * udp * u[i];
    for (std::size_t i = 0; i < m; ++i) {
      cplx* row = &a[(k + 1 + i) * n + (k + 1)];
      const cplx wi = w[i];
      const cplx ui = u[i];
      for (std::size_t j = 0; j < m; ++j) {
        row[j] -= wi * std::conj(u[j]) + ui * std::conj(w[j]);
      }
    }

    at(k + 1, k) = alpha;
    at(k, k + 1) = std::conj(alpha);
    for (std::size_t i = 2; i <= m; ++i) {
      at(k + i, k) = 0.0;
      at(k, k + i) = 0.0;
    }
    reflectors[k] = std::move(u);
  }

  // Diagonal phases that turn the complex subdiagonal real and nonnegative.
  std::vector<cplx> dphase(n, cplx(1.0));
  Tridiagonal t;
  t.d.resize(n);
  t.e.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) t.d[i] = at(i, i).real();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const cplx f = at(k + 1, k);
    const double mag = std::abs(f);
    t.e[k] = mag;
    dphase[k + 1] = (mag == 0.0) ? dphase[k] : dphase[k] * (std::conj(f) / mag);
  }

  if (q_out) {
    // Q = P_0 P_1 ... P_{n-3} D^dag, built by applying reflectors from the
    // innermost outward.
    ComplexMatrix q(n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = std::conj(dphase[i]);
    std::vector<cplx> tmp(n);
    for (std::size_t k = reflectors.size(); k-- > 0;) {
      const std::vector<cplx>& u = reflectors[k];
      if (u.empty()) continue;
      const std::size_t m = u.size();
      std::fill(tmp.begin(), tmp.end(), cplx(0.0));
      for (std::size_t i = 0; i < m; ++i) {
        const cplx cu = std::conj(u[i]);
        const cplx* row = &q.data()[(k + 1 + i) * n];
        for (std::size_t j = 0; j < n; ++j) tmp[j] += cu * row[j];
      }
      for (std::size_t i = 0; i < m; ++i) {
        const cplx tu = 2.0 * u[i];
        cplx* row = &q.data()[(k + 1 + i) * n];
        for (std::size_t j = 0; j < n; ++j) row[j] -= tu * tmp[j];
      }
    }
    *q_out = std::move(q);
  }
  return t;
}

// Implicit-shift QL with eigenvector columns rotated alongside when q is
// present. Ported from the classic tridiagonal QL algorithm.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* q) {
  const std::size_t n = d.size();
  if (n < 2) return;
  const double eps = std::numeric_limits<double>::epsilon();

  // Absolute deflation floor at the matrix scale; the relative test alone
  // cannot fire inside exactly degenerate (zero-diagonal) blocks.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]));
  for (std::size_t i = 0; i + 1 < n; ++i) scale = std::max(scale, std::abs(e[i]));
  const double floor = eps * scale;

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor) break;
      }
      if (m != l) {
        if (iterations++ == kMaxQlIterations) {
          throw EighError("eigensolver failed to converge within " +
                          std::to_string(kMaxQlIterations) + " QL iterations per eigenvalue");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (q) {
            for (std::size_t row = 0; row < n; ++row) {
              cplx* base = &q->data()[row * n + i];
              const cplx f2 = base[1];
              base[1] = s * base[0] + c * f2;
              base[0] = c * base[0] - s * f2;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void sort_ascending(std::vector<double>& d, ComplexMatrix* q) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  std::vector<double> ds(n);
  for (std::size_t i = 0; i < n; ++i) ds[i] = d[order[i]];
  d = std::move(ds);
  if (q) {
    ComplexMatrix sorted(n);
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t col = 0; col < n; ++col) {
        sorted(row, col) = (*q)(row, order[col]);
      }
    }
    *q = std::move(sorted);
  }
}

void validate(const HermitianMatrix& h, const Spectrum& s) {
  const std::size_t n = h.dim();
  const ComplexMatrix& v = s.eigenvectors;

  double max_unit_dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += std::conj(v(k, i)) * v(k, j);
      if (i == j) acc -= 1.0;
      max_unit_dev = std::max(max_unit_dev, std::abs(acc));
    }
  }
  if (max_unit_dev > kUnitarityTol) {
    throw EighError("eigenvector unitarity deviation " + std::to_string(max_unit_dev) +
                    " exceeds tolerance");
  }

  double scale = 0.0;
  for (double lambda : s.eigenvalues) scale = std::max(scale, std::abs(lambda));
  const double bound = kResidualTol * static_cast<double>(n) * std::max(scale, 1e-300);
  double max_residual = 0.0;
  std::vector<cplx> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += v(i, k) * s.eigenvalues[k] * std::conj(v(j, k));
      }
      max_residual = std::max(max_residual, std::abs(acc - h(i, j)));
    }
  }
  if (scale > 0.0 && max_residual > bound) {
    throw EighError("eigendecomposition residual " + std::to_string(max_residual) +
                    " exceeds tolerance " + std::to_string(bound));
  }
}

}  // namespace

Spectrum eigh(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  Spectrum s;
  if (n == 1) {
    s.eigenvalues = {h(0, 0).real()};
    s.eigenvectors = ComplexMatrix::identity(1);
    return s;
  }
  ComplexMatrix q;
  Tridiagonal t = tridiagonalize(h, &q);
  ql_implicit_shift(t.d, t.e, &q);
  sort_ascending(t.d, &q);
  s.eigenvalues = std::move(t.d);
  s.eigenvectors = std::move(q);
  validate(h, s);
  return s;
}

std::vector<double> eigvalsh(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 1) return {h(0, 0).real()};
  Tridiagonal t = tridiagonalize(h, nullptr);
  ql_implicit_shift(t.d, t.e, nullptr);
  sort_ascending(t.d, nullptr);
  return t.d;
}

double spectral_norm(const HermitianMatrix& h) {
  const std::vector<double> vals = eigvalsh(h);
  return std::max(std::abs(vals.front()), std::abs(vals.back()));
}

StateVector evolve(const Spectrum& spec, double t, const StateVector& psi) {
  const std::size_t n = spec.eigenvalues.size();
  if (psi.size() != n) throw std::invalid_argument("evolve: state dimension mismatch");
  if (std::abs(state_norm(psi) - 1.0) > 1e-10) {
    throw std::invalid_argument("evolve: input state is not unit-norm");
  }
  const ComplexMatrix& v = spec.eigenvectors;
  std::vector<cplx> coeff(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(v(i, k)) * psi[i];
    coeff[k] = acc * std::polar(1.0, -spec.eigenvalues[k] * t);
  }
  StateVector out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = 0.0;
    const cplx* row = &v.data()[i * n];
    for (std::size_t k = 0; k < n; ++k) acc += row[k] * coeff[k];
    out[i] = acc;
  }
  return out;
}

StateVector evolve(const HermitianMatrix& h, double t, const StateVector& psi) {
  if (psi.size() != h.dim()) throw std::invalid_argument("evolve: state dimension mismatch");
  return evolve(eigh(h), t, psi);
}

ComplexMatrix expm_unitary(const HermitianMatrix& h, double t) {
  const Spectrum spec = eigh(h);
  const std::size_t n = h.dim();
  const ComplexMatrix& v = spec.eigenvectors;
  std::vector<cplx> phases(n);
  for (std::size_t k = 0; k < n; ++k) phases[k] = std::polar(1.0, -spec.eigenvalues[k] * t);
  ComplexMatrix u(n);
  std::vector<cplx> scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) scaled[k] = v(i, k) * phases[k];
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += scaled[k] * std::conj(v(j, k));
      u(i, j) = acc;
    }
  }
  return u;
}

}  // namespace hamlim
