#include <doctest.h>

#include <cmath>

#include "hamlim/experiments.hpp"
#include "hamlim/rng.hpp"
#include "test_util.hpp"

using namespace hamlim;
using namespace hamlim::testutil;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("experiments") {

TEST_CASE("phase oracle on a matrix backing") {
  HermitianMatrix h(2);
  h.set(0, 1, cplx(0.0, -2.0));
  CountedPhaseOracle oracle = CountedPhaseOracle::for_matrix(h);
  CHECK(oracle.query(0, 1) == cplx(0.0, -1.0));
  CHECK(oracle.query(0, 0) == cplx(1.0));  // zero entry -> 1 by convention
  CHECK(oracle.matrix_queries() == 2);
}

TEST_CASE("circulant phase oracle counts string lookups") {
  const SignString s = parse_sign_string("+-+");
  const HermitianMatrix h = circulant_from_string(s);
  CountedPhaseOracle oracle = CountedPhaseOracle::for_circulant(s);
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx phase = oracle.query(i, j);
      if (i == j) {
        CHECK(phase == cplx(1.0));
      } else {
        CHECK(phase == h(i, j));  // entries are +-1, so phase == entry
      }
    }
  }
  CHECK(oracle.matrix_queries() == n * n);
  CHECK(oracle.string_queries() == n * n - n);  // diagonal is free
}

TEST_CASE("parity experiment on fixed strings") {
  const ParityResult zeros = parity_experiment(parse_bit_string("00000000"));
  CHECK(zeros.parity == 0);
  CHECK(zeros.fidelity >= 1.0 - 1e-6);
  CHECK(zeros.subspace_deviation <= 1e-8);
  CHECK(zeros.report.pass);

  const ParityResult mixed = parity_experiment(parse_bit_string("10110100"));
  CHECK(mixed.parity == parity_of(parse_bit_string("10110100")));
  CHECK(mixed.report.pass);
}

TEST_CASE("parity experiment random sweep") {
  Rng rng(301);
  for (int trial = 0; trial < 10; ++trial) {
    const BitString s = random_bit_string(8, rng);
    const ParityResult r = parity_experiment(s);
    CHECK(r.parity == parity_of(s));
    CHECK(r.fidelity >= 1.0 - 1e-6);
    CHECK(r.subspace_deviation <= 1e-8);
    CHECK(r.k_marginal_deviation <= 1e-8);
  }
}

TEST_CASE("parity experiment honors the dimension cap") {
  Rng rng(303);
  CHECK_THROWS_AS(parity_experiment(random_bit_string(64, rng)), std::length_error);
}

TEST_CASE("sign detection closed form at M = 2") {
  const SignString s = parse_sign_string("++");
  const PromiseConfig cfg = promise_config(2, 2);
  CHECK(cfg.tau == doctest::Approx(kPi / 8.0).epsilon(1e-15));
  const SignDetectionResult r = sign_detection_experiment(s, cfg);
  CHECK(r.sign == 1);
  CHECK(r.phase_error <= 1e-8);
  CHECK(r.report.pass);

  // Negating the string conjugates the phase and flips the sign.
  const SignDetectionResult neg = sign_detection_experiment(parse_sign_string("--"), cfg);
  CHECK(neg.sign == -1);
  CHECK(neg.phase_error <= 1e-8);
}

TEST_CASE("sign detection on sampled promise strings") {
  const PromiseConfig cfg = derive_promise_bound(30);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SignString s = sample_promise_string(cfg, derive_seed(500, seed));
    const SignDetectionResult r = sign_detection_experiment(s, cfg);
    CHECK(r.sign == (sign_sum(s) > 0 ? 1 : -1));
    CHECK(r.phase_error <= 1e-8);
    CHECK(r.magnitude_error <= 1e-9);
    CHECK(r.string_queries <= r.matrix_queries);
    CHECK(r.report.pass);
  }
}

TEST_CASE("sign detection rejects promise violations") {
  const PromiseConfig cfg = promise_config(4, 2);
  CHECK_THROWS_AS(sign_detection_experiment(parse_sign_string("++++"), cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(sign_detection_experiment(parse_sign_string("++"), cfg),
                  std::invalid_argument);
}

TEST_CASE("fastforward witness returns to the identity at tau = 2 pi") {
  const FastForwardResult r1 = fastforward_witness(1, 2.0 * kPi);
  CHECK(r1.max_deviation_from_identity <= 1e-12);
  CHECK(r1.report.pass);

  const FastForwardResult r6 = fastforward_witness(6, 2.0 * kPi);
  CHECK(r6.max_deviation_from_identity <= 1e-9);
  CHECK(r6.abs_spectral / r6.spectral == doctest::Approx(8.0).epsilon(1e-9));

  // Half period gives -I instead.
  const FastForwardResult half = fastforward_witness(1, kPi);
  CHECK(half.max_deviation_from_identity == doctest::Approx(2.0).epsilon(1e-9));
}

}  // TEST_SUITE
