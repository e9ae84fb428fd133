#include <doctest.h>

#include <cmath>
#include <complex>

#include "hamlim/eigh.hpp"
#include "hamlim/matrix.hpp"
#include "test_util.hpp"

using namespace hamlim;
using namespace hamlim::testutil;

namespace {
constexpr double kPi = 3.14159265358979323846;

HermitianMatrix pauli_x() {
  HermitianMatrix h(2);
  h.set(0, 1, 1.0);
  return h;
}
}  // namespace

TEST_SUITE("matcore") {

TEST_CASE("constructor symmetrizes small asymmetry and rejects large") {
  std::vector<cplx> entries = {cplx(1.0), cplx(0.5, 1e-13), cplx(0.5, 0.0), cplx(2.0)};
  const HermitianMatrix h = HermitianMatrix::from_entries(2, entries);
  CHECK(h(0, 1) == std::conj(h(1, 0)));
  CHECK(h(0, 0).imag() == 0.0);

  entries[1] = cplx(0.5, 1e-3);
  CHECK_THROWS_AS(HermitianMatrix::from_entries(2, entries), std::invalid_argument);

  entries[1] = cplx(0.5, std::nan(""));
  CHECK_THROWS_AS(HermitianMatrix::from_entries(2, entries), std::invalid_argument);
}

TEST_CASE("eigh identity and pauli-x") {
  HermitianMatrix id(3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1.0);
  const Spectrum s = eigh(id);
  for (double v : s.eigenvalues) CHECK(v == 1.0);

  const Spectrum x = eigh(pauli_x());
  CHECK(x.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(x.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigh reconstruction and unitarity over random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.next_below(63);
    const HermitianMatrix h = random_hermitian(n, rng, trial % 2 == 0);
    const Spectrum s = eigh(h);  // self-validates residual and unitarity
    double scale = 0.0;
    for (double v : s.eigenvalues) scale = std::max(scale, std::abs(v));
    // Explicit reconstruction check, independent of the solver's own gate.
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          acc += s.eigenvectors(i, k) * s.eigenvalues[k] * std::conj(s.eigenvectors(j, k));
        }
        residual = std::max(residual, std::abs(acc - h(i, j)));
      }
    }
    CHECK(residual <= 1e-10 * static_cast<double>(n) * scale);
    for (std::size_t k = 1; k < n; ++k) CHECK(s.eigenvalues[k - 1] <= s.eigenvalues[k]);
  }
}

TEST_CASE("eigh is deterministic") {
  Rng rng(7);
  const HermitianMatrix h = random_hermitian(24, rng);
  const Spectrum a = eigh(h);
  const Spectrum b = eigh(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors.data() == b.eigenvectors.data());
}

TEST_CASE("eigvalsh agrees with eigh") {
  Rng rng(11);
  const HermitianMatrix h = random_hermitian(20, rng);
  const Spectrum s = eigh(h);
  const std::vector<double> vals = eigvalsh(h);
  REQUIRE(vals.size() == s.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    CHECK(vals[i] == doctest::Approx(s.eigenvalues[i]).epsilon(1e-12));
  }
}

TEST_CASE("evolve at t = 0 is the identity") {
  Rng rng(3);
  const HermitianMatrix h = random_hermitian(8, rng);
  const StateVector psi = random_unit_state(8, rng);
  CHECK(max_abs_diff(evolve(h, 0.0, psi), psi) <= 1e-12);
}

TEST_CASE("evolve pauli-x quarter period maps |0> to -i|1>") {
  const StateVector out = evolve(pauli_x(), kPi / 2.0, basis_state(2, 0));
  CHECK(std::abs(out[0]) <= 1e-12);
  CHECK(std::abs(out[1]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(out[1] - cplx(0.0, -1.0)) <= 1e-12);
}

TEST_CASE("evolve closed form for exp(-iXt)") {
  // exp(-iXt) = cos(t) I - i sin(t) X
  const HermitianMatrix x = pauli_x();
  for (double t : {0.3, 1.7, -2.5}) {
    const StateVector out = evolve(x, t, basis_state(2, 0));
    CHECK(std::abs(out[0] - cplx(std::cos(t), 0.0)) <= 1e-12);
    CHECK(std::abs(out[1] - cplx(0.0, -std::sin(t))) <= 1e-12);
  }
}

TEST_CASE("evolution group law and norm preservation") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.next_below(15);
    const HermitianMatrix h = random_hermitian(n, rng);
    const StateVector psi = random_unit_state(n, rng);
    const double t1 = 3.0 * rng.next_symmetric();
    const double t2 = 3.0 * rng.next_symmetric();
    const StateVector split = evolve(h, t1, evolve(h, t2, psi));
    const StateVector joint = evolve(h, t1 + t2, psi);
    CHECK(max_abs_diff(split, joint) <= 1e-9);
    CHECK(std::abs(state_norm(joint) - 1.0) <= 1e-10);
  }
}

TEST_CASE("evolve rejects dimension mismatch and non-unit states") {
  const HermitianMatrix x = pauli_x();
  CHECK_THROWS_AS(evolve(x, 1.0, basis_state(3, 0)), std::invalid_argument);
  StateVector bad(2, cplx(1.0, 0.0));
  CHECK_THROWS_AS(evolve(x, 1.0, bad), std::invalid_argument);
}

TEST_CASE("expm_unitary special values") {
  Rng rng(9);
  const HermitianMatrix h = random_hermitian(6, rng);
  const ComplexMatrix u0 = expm_unitary(h, 0.0);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(std::abs(u0(i, j) - (i == j ? cplx(1.0) : cplx(0.0))) <= 1e-12);
    }
  }

  HermitianMatrix diag(2);
  diag.set(0, 0, 1.0);
  diag.set(1, 1, 2.0);
  const ComplexMatrix u = expm_unitary(diag, kPi);
  CHECK(std::abs(u(0, 0) - cplx(-1.0, 0.0)) <= 1e-12);
  CHECK(std::abs(u(1, 1) - cplx(1.0, 0.0)) <= 1e-12);
  CHECK(std::abs(u(0, 1)) <= 1e-12);
}

TEST_CASE("expm_unitary columns match evolve on basis states") {
  Rng rng(13);
  const std::size_t n = 9;
  const HermitianMatrix h = random_hermitian(n, rng);
  const double t = 1.37;
  const ComplexMatrix u = expm_unitary(h, t);
  for (std::size_t j = 0; j < n; ++j) {
    const StateVector col = evolve(h, t, basis_state(n, j));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(u(i, j) - col[i]) <= 1e-10);
  }
}

TEST_CASE("expm_unitary stays unitary for large times") {
  Rng rng(17);
  for (double t : {1.0, -313.7, 997.0}) {
    const std::size_t n = 2 + rng.next_below(10);
    const HermitianMatrix h = random_hermitian(n, rng);
    const ComplexMatrix u = expm_unitary(h, t);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += std::conj(u(k, i)) * u(k, j);
        if (i == j) acc -= 1.0;
        dev = std::max(dev, std::abs(acc));
      }
    }
    CHECK(dev <= 1e-9);
  }
}

TEST_CASE("kron identities and norm multiplicativity") {
  HermitianMatrix i2(2), i3(3);
  for (std::size_t i = 0; i < 2; ++i) i2.set(i, i, 1.0);
  for (std::size_t i = 0; i < 3; ++i) i3.set(i, i, 1.0);
  const HermitianMatrix i6 = kron(i2, i3);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(i6(i, j) == (i == j ? cplx(1.0) : cplx(0.0)));
    }
  }

  HermitianMatrix one(1);
  one.set(0, 0, 1.0);
  CHECK(max_entry_diff(kron(pauli_x(), one), pauli_x()) == 0.0);

  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const HermitianMatrix a = random_hermitian(3 + rng.next_below(3), rng);
    const HermitianMatrix b = random_hermitian(2 + rng.next_below(3), rng);
    const double lhs = spectral_norm(kron(a, b));
    const double rhs = spectral_norm(a) * spectral_norm(b);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("abs_entrywise strips signs and is idempotent") {
  HermitianMatrix h(2);
  h.set(0, 1, cplx(-1.0, 0.0));
  h.set(0, 0, -2.0);
  const HermitianMatrix a = abs_entrywise(h);
  CHECK(a(0, 1) == cplx(1.0));
  CHECK(a(0, 0) == cplx(2.0));
  CHECK(max_entry_diff(abs_entrywise(a), a) == 0.0);

  // R (x) R has entries +-1/2, so the absolute value is constant 1/2.
  HermitianMatrix r(2);
  const double s = 1.0 / std::sqrt(2.0);
  r.set(0, 0, s);
  r.set(0, 1, s);
  r.set(1, 1, -s);
  const HermitianMatrix rr_abs = abs_entrywise(kron(r, r));
  for (const cplx& v : rr_abs.data()) CHECK(std::abs(v - cplx(0.5)) <= 1e-15);
}

}  // TEST_SUITE
