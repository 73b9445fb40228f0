#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwht/bigint.hpp"

namespace gwht {

/// Exact element of Z[zeta_p], p prime, stored in the basis
/// {1, zeta, ..., zeta^(p-2)}. zeta^(p-1) is rewritten as
/// -(1 + zeta + ... + zeta^(p-2)), so the representation is unique.
/// For p = 2 it is a plain integer (zeta = -1).
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::uint32_t p);
  CyclotomicInteger(std::uint32_t p, const BigInt& value);

  static CyclotomicInteger zeta_power(std::uint32_t p, std::uint64_t exponent);

  [[nodiscard]] std::uint32_t order() const noexcept { return p_; }
  [[nodiscard]] std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  /// True when every coefficient beyond the constant term is zero.
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] std::optional<BigInt> to_integer() const;

  /// *this += c * zeta^e.
  void add_scaled_power(const BigInt& c, std::uint64_t exponent);
  /// *this += x * zeta^e.
  void add_rotated(const CyclotomicInteger& x, std::uint64_t exponent);

  CyclotomicInteger& operator+=(const CyclotomicInteger& other);
  CyclotomicInteger& operator-=(const CyclotomicInteger& other);
  CyclotomicInteger& operator*=(const BigInt& scale);

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

  /// "5" when integral, otherwise "zeta(c0,c1,...)".
  [[nodiscard]] std::string to_string() const;

 private:
  void check_same_order(const CyclotomicInteger& other) const;

  std::uint32_t p_;
  std::vector<BigInt> coeffs_;  // length p - 1 (1 when p = 2)
};

}  // namespace gwht
