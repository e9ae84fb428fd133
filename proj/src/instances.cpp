#include "hamlim/instances.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hamlim {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " must be nonempty");
}

}  // namespace

int parity_of(const BitString& s) {
  int p = 0;
  for (std::uint8_t b : s.bits) p ^= static_cast<int>(b);
  return p;
}

int sign_sum(const SignString& s) {
  int sum = 0;
  for (int v : s.signs) sum += v;
  return sum;
}

BitString parse_bit_string(const std::string& text) {
  BitString s;
  for (char c : text) {
    if (c == '0' || c == '1') {
      s.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else {
      throw std::invalid_argument("bit strings use characters 0 and 1 only");
    }
  }
  require_nonempty(s.bits.size(), "bit string");
  return s;
}

SignString parse_sign_string(const std::string& text) {
  SignString s;
  for (char c : text) {
    if (c == '+') {
      s.signs.push_back(1);
    } else if (c == '-') {
      s.signs.push_back(-1);
    } else {
      throw std::invalid_argument("sign strings use characters + and - only");
    }
  }
  require_nonempty(s.signs.size(), "sign string");
  return s;
}

BitString random_bit_string(std::size_t n, Rng& rng) {
  require_nonempty(n, "bit string");
  BitString s;
  s.bits.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.bits[i] = static_cast<std::uint8_t>(rng.next_u64() & 1u);
  return s;
}

SignString random_sign_string(std::size_t m, Rng& rng) {
  require_nonempty(m, "sign string");
  SignString s;
  s.signs.resize(m);
  for (std::size_t i = 0; i < m; ++i) s.signs[i] = rng.next_sign();
  return s;
}

HermitianMatrix line_hamiltonian(std::size_t n) {
  require_nonempty(n, "line length");
  HermitianMatrix h(n + 1);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::sqrt(static_cast<double>((n - i) * (i + 1))) * scale;
    h.set(i, i + 1, w);
  }
  return h;
}

HermitianMatrix parity_hamiltonian(const BitString& s) {
  const std::size_t n = s.bits.size();
  require_nonempty(n, "bit string");
  HermitianMatrix h(2 * (n + 1));
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::sqrt(static_cast<double>((n - i) * (i + 1))) * scale;
    for (std::size_t j = 0; j < 2; ++j) {
      h.set(2 * i + j, 2 * (i + 1) + (j ^ s.bits[i]), w);
    }
  }
  return h;
}

HermitianMatrix dense_parity_hamiltonian(const BitString& s, std::size_t dim_cap) {
  const std::size_t n = s.bits.size();
  if (n < 2) throw std::invalid_argument("dense parity Hamiltonian needs at least 2 bits");
  const std::size_t dim = 2 * n * (n + 1);
  if (dim > dim_cap) {
    throw std::length_error("dense parity Hamiltonian dimension " + std::to_string(dim) +
                            " exceeds the cap " + std::to_string(dim_cap));
  }
  HermitianMatrix h(dim);
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::sqrt(static_cast<double>((n - i) * (i + 1))) * scale;
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t row_block = (2 * i + j) * n;
      const std::size_t col_block = (2 * (i + 1) + (j ^ s.bits[i])) * n;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t kp = 0; kp < n; ++kp) {
          h.set(row_block + k, col_block + kp, w);
        }
      }
    }
  }
  return h;
}

HermitianMatrix circulant_from_string(const SignString& s) {
  const std::size_t m = s.signs.size();
  require_nonempty(m, "sign string");
  const std::size_t n = 2 * m + 1;
  std::vector<double> first_row(n, 0.0);
  for (std::size_t j = 1; j <= m; ++j) {
    first_row[j] = static_cast<double>(s.signs[j - 1]);
    first_row[n - j] = static_cast<double>(s.signs[j - 1]);
  }
  HermitianMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      h.set(i, j, first_row[j - i]);
    }
  }
  return h;
}

CirculantSpectrum circulant_spectrum(const SignString& s) {
  const std::size_t m = s.signs.size();
  require_nonempty(m, "sign string");
  const std::size_t n = 2 * m + 1;
  // Mirrored table keeps lambda_r == lambda_{N-r} bit-exact.
  std::vector<double> cos_table(n);
  for (std::size_t idx = 0; idx <= n / 2; ++idx) {
    cos_table[idx] = std::cos(2.0 * kPi * static_cast<double>(idx) / static_cast<double>(n));
    if (idx != 0) cos_table[n - idx] = cos_table[idx];
  }
  CirculantSpectrum spec;
  spec.lambdas.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    double acc = 0.0;
    std::size_t idx = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      idx += r;
      if (idx >= n) idx -= n;
      acc += static_cast<double>(s.signs[j - 1]) * cos_table[idx];
    }
    spec.lambdas[r] = 2.0 * acc;
  }
  spec.lambda0 = spec.lambdas[0];
  return spec;
}

double circulant_spectral_norm(const SignString& s) {
  const CirculantSpectrum spec = circulant_spectrum(s);
  double best = 0.0;
  for (double lambda : spec.lambdas) best = std::max(best, std::abs(lambda));
  return best;
}

HermitianMatrix hadamard_tensor(unsigned n) {
  if (n == 0) throw std::invalid_argument("hadamard_tensor needs n >= 1");
  if (n > 12) throw std::length_error("hadamard_tensor capped at dimension 2^12");
  const std::size_t dim = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  HermitianMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const bool negative = __builtin_popcountll(i & j) & 1;
      h.set(i, j, negative ? -scale : scale);
    }
  }
  return h;
}

HermitianMatrix saturating_witness(WitnessKind kind, std::size_t size) {
  require_nonempty(size, "witness size");
  switch (kind) {
    case WitnessKind::identity: {
      HermitianMatrix h(size);
      for (std::size_t i = 0; i < size; ++i) h.set(i, i, 1.0);
      return h;
    }
    case WitnessKind::all_ones: {
      HermitianMatrix h(size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) h.set(i, j, 1.0);
      }
      return h;
    }
    case WitnessKind::hadamard:
      return hadamard_tensor(static_cast<unsigned>(size));
  }
  throw std::invalid_argument("unknown witness kind");
}

}  // namespace hamlim
