#pragma once

// Conversions between BigInt and fixed-width integers for the hot loops.
// Callers choose the narrowest type whose range provably covers every
// intermediate value.

#include <cstdint>

#include "gwht/bigint.hpp"

namespace gwht::detail {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

enum class Width { i64, i128, big };

/// Narrowest width that holds any value of magnitude <= bound.
inline Width width_for(const BigInt& bound) {
  static const BigInt kMax64 = (BigInt{1} << 62);
  static const BigInt kMax128 = (BigInt{1} << 125);
  if (bound < kMax64) return Width::i64;
  if (bound < kMax128) return Width::i128;
  return Width::big;
}

inline Int128 to_int128(const BigInt& x) {
  const bool negative = x < 0;
  const BigInt mag = negative ? BigInt{-x} : x;
  const auto lo = static_cast<std::uint64_t>(mag & BigInt{0xFFFFFFFFFFFFFFFFull});
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const Int128 value = (static_cast<Int128>(hi) << 64) | static_cast<Int128>(lo);
  return negative ? -value : value;
}

inline BigInt from_int128(Int128 x) {
  const bool negative = x < 0;
  const auto mag = static_cast<UInt128>(negative ? -x : x);
  BigInt out = BigInt{static_cast<std::uint64_t>(mag >> 64)};
  out <<= 64;
  out |= BigInt{static_cast<std::uint64_t>(mag)};
  return negative ? BigInt{-out} : out;
}

template <class T>
T narrow(const BigInt& x) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    return static_cast<std::int64_t>(x);
  } else if constexpr (std::is_same_v<T, Int128>) {
    return to_int128(x);
  } else {
    return x;
  }
}

template <class T>
BigInt widen(const T& x) {
  if constexpr (std::is_same_v<T, Int128>) {
    return from_int128(x);
  } else {
    return BigInt{x};
  }
}

}  // namespace gwht::detail
