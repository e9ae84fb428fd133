#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hamlim/eigh.hpp"
#include "hamlim/graph.hpp"
#include "hamlim/instances.hpp"
#include "hamlim/norms.hpp"
#include "test_util.hpp"

using namespace hamlim;
using namespace hamlim::testutil;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("instances") {

TEST_CASE("line hamiltonian small cases") {
  const HermitianMatrix h1 = line_hamiltonian(1);
  CHECK(h1.dim() == 2);
  CHECK(h1(0, 1) == cplx(1.0));
  CHECK(h1(0, 0) == cplx(0.0));

  const HermitianMatrix h2 = line_hamiltonian(2);
  CHECK(h2(0, 1).real() == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK(h2(1, 2).real() == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK(h2(0, 2) == cplx(0.0));
}

TEST_CASE("line spectrum is equally spaced with unit norm") {
  for (std::size_t n : {1ul, 2ul, 5ul, 16ul, 32ul}) {
    const std::vector<double> vals = eigvalsh(line_hamiltonian(n));
    const double spacing = 2.0 / static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) {
      CHECK(vals[i] == doctest::Approx(-1.0 + spacing * static_cast<double>(i)).epsilon(1e-9));
    }
  }
}

TEST_CASE("line transfer |0> -> |N> at t = pi N / 2") {
  for (std::size_t n : {1ul, 2ul, 8ul, 16ul}) {
    const HermitianMatrix h = line_hamiltonian(n);
    const StateVector out = evolve(h, kPi * static_cast<double>(n) / 2.0, basis_state(n + 1, 0));
    CHECK(std::abs(out[n]) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("parity hamiltonian edge structure") {
  BitString zero{{0}};
  const HermitianMatrix h0 = parity_hamiltonian(zero);
  CHECK(h0.dim() == 4);
  CHECK(h0(0, 2) == cplx(1.0));  // |0,0> -- |1,0>
  CHECK(h0(1, 3) == cplx(1.0));  // |0,1> -- |1,1>
  CHECK(h0(0, 3) == cplx(0.0));

  BitString one{{1}};
  const HermitianMatrix h1 = parity_hamiltonian(one);
  CHECK(h1(0, 3) == cplx(1.0));  // |0,0> -- |1,1>
  CHECK(h1(1, 2) == cplx(1.0));  // |0,1> -- |1,0>
  CHECK(h1(0, 2) == cplx(0.0));
}

TEST_CASE("parity hamiltonian graph is two disjoint paths") {
  Rng rng(47);
  const std::size_t n = 8;
  const BitString s = random_bit_string(n, rng);
  const WeightedGraph g = graph_of(parity_hamiltonian(s));
  const ForestClassification cls = classify_graph(g);
  CHECK(cls.is_forest);
  CHECK(cls.component_count == 2);
  std::vector<std::size_t> sizes(2, 0);
  for (int c : cls.component) ++sizes[static_cast<std::size_t>(c)];
  CHECK(sizes[0] == n + 1);
  CHECK(sizes[1] == n + 1);
  // Paths: every vertex has degree at most 2.
  std::vector<std::size_t> degree(g.n, 0);
  for (const WeightedEdge& e : g.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  CHECK(*std::max_element(degree.begin(), degree.end()) <= 2);
}

TEST_CASE("parity evolution lands on |N, parity(S)>") {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 8;
    const BitString s = random_bit_string(n, rng);
    const HermitianMatrix h = parity_hamiltonian(s);
    const StateVector out =
        evolve(h, kPi * static_cast<double>(n) / 2.0, basis_state(h.dim(), 0));
    const std::size_t target = 2 * n + static_cast<std::size_t>(parity_of(s));
    CHECK(std::abs(out[target]) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("dense parity equals kron(H2, J)/N") {
  Rng rng(59);
  for (std::size_t n : {2ul, 5ul, 8ul}) {
    const BitString s = random_bit_string(n, rng);
    const HermitianMatrix dense = dense_parity_hamiltonian(s);
    CHECK(dense.dim() == 2 * n * (n + 1));

    HermitianMatrix j_over_n(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) j_over_n.set(a, b, 1.0 / static_cast<double>(n));
    }
    const HermitianMatrix tensor = kron(parity_hamiltonian(s), j_over_n);
    CHECK(max_entry_diff(dense, tensor) <= 1e-15);
  }
}

TEST_CASE("dense parity norm scales at N = 8") {
  Rng rng(61);
  const std::size_t n = 8;
  const NormProfile p = norm_profile(dense_parity_hamiltonian(random_bit_string(n, rng)));
  CHECK(p.spectral == doctest::Approx(1.0).epsilon(1e-9));
  const double nd = static_cast<double>(n);
  CHECK(p.max_norm * nd >= 0.4);
  CHECK(p.max_norm * nd <= 0.7);
  CHECK(p.mcn * std::sqrt(nd) >= 0.5);
  CHECK(p.mcn * std::sqrt(nd) <= 1.0);
}

TEST_CASE("dense parity respects the dimension cap") {
  Rng rng(67);
  const BitString s = random_bit_string(16, rng);
  CHECK_THROWS_AS(dense_parity_hamiltonian(s, 256), std::length_error);
  CHECK_NOTHROW(dense_parity_hamiltonian(s, 544));
}

TEST_CASE("circulant construction from small strings") {
  const SignString plus{{1}};
  const HermitianMatrix h = circulant_from_string(plus);
  CHECK(h.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(h(i, j) == (i == j ? cplx(0.0) : cplx(1.0)));
    }
  }

  const SignString pm{{1, -1}};
  const HermitianMatrix h2 = circulant_from_string(pm);
  const double expected[5] = {0.0, 1.0, -1.0, -1.0, 1.0};
  for (std::size_t j = 0; j < 5; ++j) CHECK(h2(0, j).real() == expected[j]);
}

TEST_CASE("circulant rows are rotations and the matrix is symmetric") {
  Rng rng(71);
  const SignString s = random_sign_string(7, rng);
  const HermitianMatrix h = circulant_from_string(s);
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(h(i, j) == h(0, (j + n - i) % n));
      CHECK(h(i, j) == h(j, i));
    }
  }
}

TEST_CASE("circulant closed-form spectrum") {
  const CirculantSpectrum one = circulant_spectrum(SignString{{1}});
  CHECK(one.lambda0 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(one.lambdas[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(one.lambdas[2] == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK(circulant_spectrum(SignString{{1, -1}}).lambda0 == 0.0);

  Rng rng(73);
  for (int trial = 0; trial < 5; ++trial) {
    const SignString s = random_sign_string(30, rng);
    const CirculantSpectrum spec = circulant_spectrum(s);
    CHECK(spec.lambda0 == doctest::Approx(2.0 * sign_sum(s)).epsilon(1e-12));
    const std::size_t n = spec.lambdas.size();
    for (std::size_t r = 1; r < n; ++r) CHECK(spec.lambdas[r] == spec.lambdas[n - r]);

    // Multiset agreement with the dense eigensolver.
    std::vector<double> closed = spec.lambdas;
    std::sort(closed.begin(), closed.end());
    const std::vector<double> numeric = eigvalsh(circulant_from_string(s));
    double dist = 0.0;
    for (std::size_t i = 0; i < n; ++i) dist = std::max(dist, std::abs(closed[i] - numeric[i]));
    CHECK(dist <= 1e-9);
  }
}

TEST_CASE("hadamard tensor basics") {
  const HermitianMatrix r = hadamard_tensor(1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(r(0, 0).real() == doctest::Approx(inv_sqrt2));
  CHECK(r(0, 1).real() == doctest::Approx(inv_sqrt2));
  CHECK(r(1, 1).real() == doctest::Approx(-inv_sqrt2));

  // Involution: H^2 = I.
  for (unsigned n : {1u, 3u, 5u}) {
    const HermitianMatrix h = hadamard_tensor(n);
    const std::size_t dim = h.dim();
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i; j < dim; ++j) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < dim; ++k) acc += h(i, k) * h(k, j);
        CHECK(std::abs(acc - (i == j ? cplx(1.0) : cplx(0.0))) <= 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(hadamard_tensor(13), std::length_error);
}

TEST_CASE("saturating witnesses") {
  const HermitianMatrix id = saturating_witness(WitnessKind::identity, 5);
  CHECK(id.dim() == 5);
  CHECK(id(2, 2) == cplx(1.0));
  CHECK(id(0, 1) == cplx(0.0));

  const NormProfile ones = norm_profile(saturating_witness(WitnessKind::all_ones, 4));
  CHECK(ones.one_norm == doctest::Approx(4.0).epsilon(1e-12));

  const HermitianMatrix had = saturating_witness(WitnessKind::hadamard, 3);
  CHECK(had.dim() == 8);
  CHECK(max_entry_diff(had, hadamard_tensor(3)) == 0.0);
}

TEST_CASE("string parsing and validation") {
  CHECK(parse_bit_string("0110").bits == std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(parse_sign_string("+-+").signs == std::vector<int>{1, -1, 1});
  CHECK_THROWS_AS(parse_bit_string("012"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sign_string(""), std::invalid_argument);
  CHECK(parity_of(parse_bit_string("0111")) == 1);
  CHECK(sign_sum(parse_sign_string("++-")) == 1);
}

}  // TEST_SUITE
