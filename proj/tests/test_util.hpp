#pragma once

#include <cmath>

#include "hamlim/graph.hpp"
#include "hamlim/matrix.hpp"
#include "hamlim/rng.hpp"

namespace hamlim::testutil {

inline HermitianMatrix random_hermitian(std::size_t n, Rng& rng, bool complex_entries = true) {
  HermitianMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h.set(i, i, rng.next_symmetric());
    for (std::size_t j = i + 1; j < n; ++j) {
      const double re = rng.next_symmetric();
      const double im = complex_entries ? rng.next_symmetric() : 0.0;
      h.set(i, j, cplx(re, im));
    }
  }
  return h;
}

// Random recursive tree: vertex v > 0 attaches to a uniform earlier vertex.
inline std::vector<std::pair<std::size_t, std::size_t>> random_tree_edges(std::size_t n,
                                                                          Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<std::size_t>(rng.next_below(v)), v);
  }
  return edges;
}

inline HermitianMatrix random_tree_hamiltonian(std::size_t n, Rng& rng,
                                               bool unit_modulus = false) {
  HermitianMatrix h(n);
  for (const auto& [u, v] : random_tree_edges(n, rng)) {
    const double angle = 2.0 * 3.14159265358979323846 * rng.next_unit();
    double mag = unit_modulus ? 1.0 : 0.25 + rng.next_unit();
    h.set(u, v, std::polar(mag, angle));
  }
  return h;
}

inline Star random_star(std::size_t leaves, Rng& rng) {
  Star star;
  star.center = 0;
  for (std::size_t i = 0; i < leaves; ++i) {
    star.leaves.push_back(i + 1);
    const double angle = 2.0 * 3.14159265358979323846 * rng.next_unit();
    star.weights.push_back(std::polar(0.25 + rng.next_unit(), angle));
  }
  return star;
}

inline StateVector random_unit_state(std::size_t n, Rng& rng) {
  StateVector psi(n);
  for (cplx& a : psi) a = cplx(rng.next_symmetric(), rng.next_symmetric());
  const double norm = state_norm(psi);
  for (cplx& a : psi) a /= norm;
  return psi;
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

inline double max_entry_diff(const HermitianMatrix& a, const HermitianMatrix& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    out = std::max(out, std::abs(a.data()[i] - b.data()[i]));
  }
  return out;
}

inline double l2_diff(const StateVector& a, const StateVector& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out += std::norm(a[i] - b[i]);
  return std::sqrt(out);
}

}  // namespace hamlim::testutil
