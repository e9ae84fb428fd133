#include "hamlim/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamlim {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kKaratsubaCutoff = 24;

std::vector<u64> add_vecs(const std::vector<u64>& a, const std::vector<u64>& b) {
  const std::vector<u64>& lo = a.size() < b.size() ? a : b;
  const std::vector<u64>& hi = a.size() < b.size() ? b : a;
  std::vector<u64> out(hi.size() + 1, 0);
  u128 carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    u128 cur = carry + hi[i];
    if (i < lo.size()) cur += lo[i];
    out[i] = static_cast<u64>(cur);
    carry = cur >> 64;
  }
  out[hi.size()] = static_cast<u64>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// a -= b, assuming a >= b.
void sub_inplace(std::vector<u64>& a, const std::vector<u64>& b) {
  u64 borrow = 0;
  for (std::size_t i = 0; i < b.size() || borrow; ++i) {
    u128 sub = borrow + (i < b.size() ? static_cast<u128>(b[i]) : 0);
    if (static_cast<u128>(a[i]) >= sub) {
      a[i] = static_cast<u64>(a[i] - sub);
      borrow = 0;
    } else {
      a[i] = static_cast<u64>((u128(1) << 64) + a[i] - sub);
      borrow = 1;
    }
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<u64> mul_school(const std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 carry = 0;
    const u128 ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      u128 cur = ai * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    out[i + b.size()] += carry;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<u64> mul_rec(const std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kKaratsubaCutoff) return mul_school(a, b);

  const std::size_t half = std::max(a.size(), b.size()) / 2;
  auto lower = [half](const std::vector<u64>& v) {
    std::vector<u64> out(v.begin(), v.begin() + std::min(half, v.size()));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  auto upper = [half](const std::vector<u64>& v) {
    if (v.size() <= half) return std::vector<u64>{};
    return std::vector<u64>(v.begin() + half, v.end());
  };

  const std::vector<u64> a0 = lower(a), a1 = upper(a);
  const std::vector<u64> b0 = lower(b), b1 = upper(b);

  std::vector<u64> z0 = mul_rec(a0, b0);
  std::vector<u64> z2 = mul_rec(a1, b1);
  std::vector<u64> z1 = mul_rec(add_vecs(a0, a1), add_vecs(b0, b1));
  sub_inplace(z1, z0);
  sub_inplace(z1, z2);

  std::vector<u64> out(std::max({z0.size(), z1.size() + half, z2.size() + 2 * half}) + 1, 0);
  auto accumulate = [&out](const std::vector<u64>& v, std::size_t shift) {
    u64 carry = 0;
    std::size_t i = 0;
    for (; i < v.size(); ++i) {
      u128 cur = static_cast<u128>(out[shift + i]) + v[i] + carry;
      out[shift + i] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    for (; carry; ++i) {
      u128 cur = static_cast<u128>(out[shift + i]) + carry;
      out[shift + i] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
  };
  accumulate(z0, 0);
  accumulate(z1, half);
  accumulate(z2, 2 * half);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

BigUint::BigUint(std::uint64_t v) {
  if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::power_of_two(std::size_t exponent) {
  BigUint out;
  out.limbs_.assign(exponent / 64 + 1, 0);
  out.limbs_.back() = u64(1) << (exponent % 64);
  return out;
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  std::size_t bits = 64 * (limbs_.size() - 1);
  u64 top = limbs_.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

std::size_t BigUint::trailing_zero_bits() const {
  if (limbs_.empty()) return 0;
  std::size_t count = 0;
  for (u64 limb : limbs_) {
    if (limb == 0) {
      count += 64;
    } else {
      count += static_cast<std::size_t>(__builtin_ctzll(limb));
      break;
    }
  }
  return count;
}

BigUint& BigUint::operator*=(std::uint64_t m) {
  if (m == 0 || limbs_.empty()) {
    limbs_.clear();
    return *this;
  }
  u64 carry = 0;
  for (u64& limb : limbs_) {
    u128 cur = static_cast<u128>(limb) * m + carry;
    limb = static_cast<u64>(cur);
    carry = static_cast<u64>(cur >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
  limbs_ = mul_rec(limbs_, rhs.limbs_);
  return *this;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  limbs_ = add_vecs(limbs_, rhs.limbs_);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (compare(rhs) < 0) throw std::underflow_error("BigUint subtraction would go negative");
  sub_inplace(limbs_, rhs.limbs_);
  return *this;
}

void BigUint::divide_exact(std::uint64_t d) {
  if (d == 0) throw std::domain_error("BigUint division by zero");
  u64 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
    limbs_[i] = static_cast<u64>(cur / d);
    rem = static_cast<u64>(cur % d);
  }
  if (rem != 0) throw std::logic_error("BigUint::divide_exact had a nonzero remainder");
  trim();
}

void BigUint::shift_right(std::size_t bits) {
  const std::size_t limb_shift = bits / 64;
  const std::size_t bit_shift = bits % 64;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
  if (bit_shift) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      limbs_[i] >>= bit_shift;
      if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << (64 - bit_shift);
    }
  }
  trim();
}

int BigUint::compare(const BigUint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::string BigUint::to_decimal() const {
  if (limbs_.empty()) return "0";
  constexpr u64 kChunk = 10'000'000'000'000'000'000ULL;  // 10^19
  std::vector<u64> chunks;
  std::vector<u64> work = limbs_;
  while (!work.empty()) {
    u64 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      u128 cur = (static_cast<u128>(rem) << 64) | work[i];
      work[i] = static_cast<u64>(cur / kChunk);
      rem = static_cast<u64>(cur % kChunk);
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    chunks.push_back(rem);
  }
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(19 - part.size(), '0') + part;
  }
  return out;
}

double BigUint::to_double_scaled(long& exp2) const {
  if (limbs_.empty()) {
    exp2 = 0;
    return 0.0;
  }
  const std::size_t top = limbs_.size() - 1;
  const std::size_t low = top >= 2 ? top - 2 : 0;
  double acc = 0.0;
  for (std::size_t i = top + 1; i-- > low;) {
    acc = acc * 0x1.0p64 + static_cast<double>(limbs_[i]);
  }
  int e = 0;
  acc = std::frexp(acc, &e);
  exp2 = static_cast<long>(64 * low) + e;
  return acc;
}

double BigUint::to_double() const {
  long e = 0;
  const double m = to_double_scaled(e);
  return std::ldexp(m, static_cast<int>(std::min<long>(e, 1 << 20)));
}

namespace {

BigUint binomial_multiplicative(u64 n, u64 k) {
  BigUint result(1);
  for (u64 i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result.divide_exact(i);
  }
  return result;
}

BigUint binomial_factored(u64 n, u64 k) {
  // Sieve of Eratosthenes up to n.
  std::vector<bool> composite(n + 1, false);
  std::vector<u64> factors;
  for (u64 p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (u64 q = p * p; q <= n; q += p) composite[q] = true;
    u64 exponent = 0;
    for (u64 q = p; q <= n; q *= p) {
      exponent += n / q - k / q - (n - k) / q;
      if (q > n / p) break;
    }
    if (exponent > 0) {
      u64 power = 1;
      for (u64 e = 0; e < exponent; ++e) power *= p;  // p^e <= n, no overflow
      factors.push_back(power);
    }
  }
  // Product tree keeps the multiplications balanced.
  std::vector<BigUint> nodes;
  nodes.reserve(factors.size());
  for (u64 f : factors) nodes.emplace_back(f);
  if (nodes.empty()) return BigUint(1);
  while (nodes.size() > 1) {
    std::vector<BigUint> next;
    next.reserve((nodes.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) {
      next.push_back(nodes[i] * nodes[i + 1]);
    }
    if (nodes.size() % 2) next.push_back(std::move(nodes.back()));
    nodes = std::move(next);
  }
  return nodes.front();
}

}  // namespace

BigUint BigUint::binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigUint();
  k = std::min(k, n - k);
  if (k == 0) return BigUint(1);
  if (n <= 4096 || k <= 64) return binomial_multiplicative(n, k);
  return binomial_factored(n, k);
}

BigUint operator*(BigUint lhs, const BigUint& rhs) {
  lhs *= rhs;
  return lhs;
}

BigUint operator+(BigUint lhs, const BigUint& rhs) {
  lhs += rhs;
  return lhs;
}

BigUint operator-(BigUint lhs, const BigUint& rhs) {
  lhs -= rhs;
  return lhs;
}

}  // namespace hamlim
