#include "gwht/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gwht/errors.hpp"
#include "gwht/gf.hpp"

namespace gwht {

namespace {
std::size_t basis_size(std::uint32_t p) { return p == 2 ? 1 : p - 1; }
}  // namespace

CyclotomicInteger::CyclotomicInteger(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InputError("cyclotomic order must be prime");
  coeffs_.assign(basis_size(p), BigInt{0});
}

CyclotomicInteger::CyclotomicInteger(std::uint32_t p, const BigInt& value) : CyclotomicInteger(p) {
  coeffs_[0] = value;
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::uint32_t p, std::uint64_t exponent) {
  CyclotomicInteger out(p);
  out.add_scaled_power(BigInt{1}, exponent);
  return out;
}

bool CyclotomicInteger::is_integer() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::optional<BigInt> CyclotomicInteger::to_integer() const {
  if (!is_integer()) return std::nullopt;
  return coeffs_[0];
}

void CyclotomicInteger::add_scaled_power(const BigInt& c, std::uint64_t exponent) {
  const auto e = static_cast<std::size_t>(exponent % p_);
  if (e == p_ - 1) {
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)); for p = 2 this is -1.
    for (BigInt& x : coeffs_) x -= c;
  } else {
    coeffs_[e] += c;
  }
}

void CyclotomicInteger::add_rotated(const CyclotomicInteger& x, std::uint64_t exponent) {
  check_same_order(x);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] != 0) add_scaled_power(x.coeffs_[i], i + exponent);
  }
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  check_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
  check_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const BigInt& scale) {
  for (BigInt& x : coeffs_) x *= scale;
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.check_same_order(b);
  CyclotomicInteger out(a.p_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] != 0) out.add_scaled_power(a.coeffs_[i] * b.coeffs_[j], i + j);
    }
  }
  return out;
}

std::string CyclotomicInteger::to_string() const {
  if (is_integer()) return coeffs_[0].str();
  std::ostringstream os;
  os << "zeta(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ")";
  return os.str();
}

void CyclotomicInteger::check_same_order(const CyclotomicInteger& other) const {
  if (other.p_ != p_) throw InputError("cyclotomic integers of different orders");
}

}  // namespace gwht
