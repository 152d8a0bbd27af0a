#include "ineq/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace ineq {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigNat::BigNat(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value & 0xFFFFFFFFull));
    value >>= 32;
  }
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigNat::compare(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigNat operator+(const BigNat& a, const BigNat& b) {
  BigNat out;
  const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
  out.limbs_.reserve(n + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t sum = carry;
    if (i < a.limbs_.size()) sum += a.limbs_[i];
    if (i < b.limbs_.size()) sum += b.limbs_[i];
    out.limbs_.push_back(static_cast<std::uint32_t>(sum & 0xFFFFFFFFull));
    carry = sum >> 32;
  }
  if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

void BigNat::sub_in_place(const BigNat& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow -
                        (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
}

BigNat operator-(const BigNat& a, const BigNat& b) {
  if (BigNat::compare(a, b) < 0) throw std::invalid_argument("BigNat subtraction would underflow");
  BigNat out = a;
  out.sub_in_place(b);
  return out;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  BigNat out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                          out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFull);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFull);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigNat& BigNat::operator*=(std::uint32_t m) {
  if (m == 0 || is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(cur & 0xFFFFFFFFull);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigNat& BigNat::divide_exact(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("BigNat division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / m);
    rem = cur % m;
  }
  if (rem != 0) throw std::logic_error("BigNat::divide_exact: remainder nonzero");
  trim();
  return *this;
}

std::size_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigNat::bit(std::size_t i) const {
  const std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigNat::shift_left_one_plus(bool carry_in) {
  std::uint32_t carry = carry_in ? 1u : 0u;
  for (auto& limb : limbs_) {
    std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) limbs_.push_back(carry);
}

std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw std::invalid_argument("BigNat division by zero");
  if (compare(a, b) < 0) return {BigNat{}, a};
  BigNat quotient, remainder;
  quotient.limbs_.assign(a.limbs_.size(), 0);
  for (std::size_t i = a.bit_length(); i-- > 0;) {
    remainder.shift_left_one_plus(a.bit(i));
    if (compare(remainder, b) >= 0) {
      remainder.sub_in_place(b);
      quotient.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  quotient.trim();
  return {quotient, remainder};
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
  while (!b.is_zero()) {
    BigNat r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigNat BigNat::factorial(unsigned n) {
  BigNat out(1);
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigNat BigNat::binomial(unsigned n, unsigned k) {
  if (k > n) return BigNat{};
  if (k > n - k) k = n - k;
  BigNat out(1);
  for (unsigned i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out.divide_exact(i);
  }
  return out;
}

double BigNat::to_double() const {
  if (is_zero()) return 0.0;
  const std::size_t bits = bit_length();
  // Take the top 64 significant bits and scale back up.
  std::uint64_t top = 0;
  const std::size_t take = std::min<std::size_t>(bits, 64);
  for (std::size_t i = 0; i < take; ++i) {
    top = (top << 1) | (bit(bits - 1 - i) ? 1u : 0u);
  }
  return std::ldexp(static_cast<double>(top), static_cast<int>(bits - take));
}

std::string BigNat::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> chunks;  // base 1e9, little-endian
  BigNat tmp = *this;
  const BigNat billion(1000000000ull);
  while (!tmp.is_zero()) {
    auto [q, r] = divmod(tmp, billion);
    chunks.push_back(r.is_zero() ? 0u : r.limbs_[0]);
    tmp = std::move(q);
  }
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

ExactRational::ExactRational(std::int64_t value)
    : negative_(value < 0),
      num_(value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value)),
      den_(1) {}

ExactRational::ExactRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
  negative_ = (num < 0) != (den < 0);
  num_ = BigNat(num < 0 ? static_cast<std::uint64_t>(-(num + 1)) + 1 : static_cast<std::uint64_t>(num));
  den_ = BigNat(den < 0 ? static_cast<std::uint64_t>(-(den + 1)) + 1 : static_cast<std::uint64_t>(den));
  normalize();
}

ExactRational::ExactRational(bool negative, BigNat num, BigNat den)
    : negative_(negative), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("ExactRational: zero denominator");
  normalize();
}

void ExactRational::normalize() {
  if (num_.is_zero()) {
    negative_ = false;
    den_ = BigNat(1);
    return;
  }
  BigNat g = BigNat::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = BigNat::divmod(num_, g).first;
    den_ = BigNat::divmod(den_, g).first;
  }
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  // Combine magnitudes over the common denominator, then resolve sign.
  BigNat lhs = a.num_ * b.den_;
  BigNat rhs = b.num_ * a.den_;
  BigNat den = a.den_ * b.den_;
  if (a.negative_ == b.negative_) {
    return ExactRational(a.negative_, lhs + rhs, std::move(den));
  }
  const int cmp = BigNat::compare(lhs, rhs);
  if (cmp == 0) return ExactRational();
  if (cmp > 0) return ExactRational(a.negative_, lhs - rhs, std::move(den));
  return ExactRational(b.negative_, rhs - lhs, std::move(den));
}

ExactRational ExactRational::operator-() const {
  if (is_zero()) return *this;
  ExactRational out = *this;
  out.negative_ = !out.negative_;
  return out;
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) { return a + (-b); }

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  return ExactRational(a.negative_ != b.negative_, a.num_ * b.num_, a.den_ * b.den_);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.is_zero()) throw std::invalid_argument("ExactRational: division by zero");
  return ExactRational(a.negative_ != b.negative_, a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const ExactRational& a, const ExactRational& b) {
  return a.negative_ == b.negative_ && a.num_ == b.num_ && a.den_ == b.den_;
}

double ExactRational::to_double() const {
  if (num_.is_zero()) return 0.0;
  // num/den via the top 64 bits of each and an exponent correction, so huge
  // factorial ratios convert without overflowing.
  const auto top_bits = [](const BigNat& v, int& exponent) {
    const std::size_t bits = v.bit_length();
    const std::size_t take = std::min<std::size_t>(bits, 64);
    std::uint64_t top = 0;
    for (std::size_t i = 0; i < take; ++i) top = (top << 1) | (v.bit(bits - 1 - i) ? 1u : 0u);
    exponent = static_cast<int>(bits - take);
    return top;
  };
  int num_exp = 0, den_exp = 0;
  const double mant = static_cast<double>(top_bits(num_, num_exp)) /
                      static_cast<double>(top_bits(den_, den_exp));
  const double mag = std::ldexp(mant, num_exp - den_exp);
  return negative_ ? -mag : mag;
}

std::string ExactRational::to_string() const {
  std::string out = negative_ ? "-" : "";
  out += num_.to_string();
  if (!den_.is_one()) out += "/" + den_.to_string();
  return out;
}

}  // namespace ineq
