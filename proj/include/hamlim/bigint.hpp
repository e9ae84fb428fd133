#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hamlim {

// Unsigned big integer, little-endian base 2^64. Sized for exact binomial
// arithmetic up to n ~ 10^6 (promise-set counts, adversary quantities), not
// a general-purpose bignum.
class BigUint {
public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);

  static BigUint power_of_two(std::size_t exponent);

  // Exact binomial coefficient. Uses the multiplicative formula when the
  // running product stays small, otherwise prime factorization (Legendre
  // exponents) combined through a product tree.
  static BigUint binomial(std::uint64_t n, std::uint64_t k);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;
  std::size_t trailing_zero_bits() const;  // 0 for the zero value

  BigUint& operator*=(std::uint64_t m);
  BigUint& operator*=(const BigUint& rhs);
  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);  // requires *this >= rhs
  void divide_exact(std::uint64_t d);       // requires zero remainder
  void shift_right(std::size_t bits);

  int compare(const BigUint& rhs) const;
  bool operator==(const BigUint& rhs) const { return compare(rhs) == 0; }
  bool operator<(const BigUint& rhs) const { return compare(rhs) < 0; }

  std::string to_decimal() const;

  // value == returned mantissa * 2^exp2, mantissa in [0.5, 1); (0, 0) if zero.
  double to_double_scaled(long& exp2) const;
  double to_double() const;  // +inf when the value exceeds double range

  const std::vector<std::uint64_t>& limbs() const { return limbs_; }

private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

BigUint operator*(BigUint lhs, const BigUint& rhs);
BigUint operator+(BigUint lhs, const BigUint& rhs);
BigUint operator-(BigUint lhs, const BigUint& rhs);

}  // namespace hamlim
