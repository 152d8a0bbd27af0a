#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ineq {

// Arbitrary-precision unsigned integer, base 2^32 limbs stored little-endian
// with no trailing zero limbs (empty vector == 0). Supports exactly what the
// exact-rational Beta oracle needs: schoolbook arithmetic, exact small
// division, long division, gcd, decimal I/O and double conversion.
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t value);

  static BigNat factorial(unsigned n);
  // C(n, k) via the multiplicative formula with exact division at each step.
  static BigNat binomial(unsigned n, unsigned k);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  // -1, 0, +1 as a < b, a == b, a > b.
  static int compare(const BigNat& a, const BigNat& b);

  friend bool operator==(const BigNat& a, const BigNat& b) { return compare(a, b) == 0; }
  friend bool operator<(const BigNat& a, const BigNat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigNat& a, const BigNat& b) { return compare(a, b) <= 0; }

  friend BigNat operator+(const BigNat& a, const BigNat& b);
  // Requires a >= b.
  friend BigNat operator-(const BigNat& a, const BigNat& b);
  friend BigNat operator*(const BigNat& a, const BigNat& b);

  BigNat& operator*=(std::uint32_t m);
  // Requires that m divides *this exactly.
  BigNat& divide_exact(std::uint32_t m);

  static std::pair<BigNat, BigNat> divmod(const BigNat& a, const BigNat& b);
  static BigNat gcd(BigNat a, BigNat b);

  std::size_t bit_length() const;
  bool bit(std::size_t i) const;

  // Rounded to nearest; +inf if the value exceeds double range.
  double to_double() const;
  std::string to_string() const;

 private:
  void trim();
  void shift_left_one_plus(bool carry_in);  // *this = *this * 2 + carry_in
  void sub_in_place(const BigNat& b);       // requires *this >= b

  std::vector<std::uint32_t> limbs_;
};

// Exact rational number, always stored in lowest terms with a positive
// denominator. Backs the integer-argument Beta oracle and the polynomial
// integration oracles in the test suite.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(std::int64_t value);  // NOLINT: implicit by design
  ExactRational(std::int64_t num, std::int64_t den);
  ExactRational(bool negative, BigNat num, BigNat den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return negative_; }
  const BigNat& numerator_magnitude() const { return num_; }
  const BigNat& denominator() const { return den_; }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
  ExactRational operator-() const;

  ExactRational& operator+=(const ExactRational& b) { return *this = *this + b; }
  ExactRational& operator*=(const ExactRational& b) { return *this = *this * b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b);
  friend bool operator!=(const ExactRational& a, const ExactRational& b) { return !(a == b); }

  double to_double() const;
  // "num/den", or just "num" when den == 1.
  std::string to_string() const;

 private:
  void normalize();

  bool negative_ = false;
  BigNat num_;
  BigNat den_;
};

}  // namespace ineq
