#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gwht {

/// An element of GF(p^l), identified by its index sum_i c_i p^i over the
/// polynomial basis {1, X, ..., X^(l-1)}. Index 0 is zero and index 1 is one.
class Element {
 public:
  constexpr Element() noexcept = default;
  constexpr explicit Element(std::uint32_t index) noexcept : index_(index) {}

  [[nodiscard]] constexpr std::uint32_t index() const noexcept { return index_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return index_ == 0; }

  friend constexpr auto operator<=>(Element, Element) noexcept = default;

 private:
  std::uint32_t index_ = 0;
};

using Vector = std::vector<Element>;

enum class ArithOp { add, sub, mul, div, neg, inv };

/// GF(q), q = p^l <= 2^16, backed by log/antilog tables.
///
/// A Field is a cheap handle onto immutable shared tables; copies compare
/// equal when they describe the same (p, l, modulus).
///
/// When l >= 2 and no modulus is given, the Conway polynomial is used for
/// q in {4, 8, 9, 16, 25, 27}. Moduli are little-endian coefficient lists
/// of length l + 1 and must be monic and irreducible.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static Field create(std::uint32_t p, std::uint32_t degree,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  /// Factors q as p^l and delegates to create().
  static Field of_order(std::uint32_t q,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Built-in default modulus for composite q, if any.
  static std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t q);

  [[nodiscard]] std::uint32_t characteristic() const noexcept;
  [[nodiscard]] std::uint32_t degree() const noexcept;
  [[nodiscard]] std::uint32_t order() const noexcept;
  [[nodiscard]] bool is_prime() const noexcept { return degree() == 1; }
  /// Empty for prime fields.
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept;

  [[nodiscard]] static constexpr Element zero() noexcept { return Element{0}; }
  [[nodiscard]] static constexpr Element one() noexcept { return Element{1}; }
  /// Range-checked element constructor.
  [[nodiscard]] Element element(std::uint32_t index) const;
  [[nodiscard]] bool contains(Element a) const noexcept { return a.index() < order(); }

  // Unchecked fast paths; operands must belong to this field.
  [[nodiscard]] Element add(Element a, Element b) const noexcept;
  [[nodiscard]] Element sub(Element a, Element b) const noexcept;
  [[nodiscard]] Element neg(Element a) const noexcept;
  [[nodiscard]] Element mul(Element a, Element b) const noexcept;
  /// Throws std::domain_error on b == 0.
  [[nodiscard]] Element div(Element a, Element b) const;
  /// Throws std::domain_error on a == 0.
  [[nodiscard]] Element inv(Element a) const;
  [[nodiscard]] Element pow(Element a, std::uint64_t e) const noexcept;

  /// Dispatches on op; b is ignored for neg and inv. Range-checks operands.
  [[nodiscard]] Element apply(ArithOp op, Element a, Element b = Element{}) const;

  /// Tr(x) = x + x^p + ... + x^(p^(l-1)), returned as an element of the prime
  /// subfield (index < p).
  [[nodiscard]] Element trace(Element a) const noexcept;

  /// Inner product sum_i a_i b_i.
  [[nodiscard]] Element dot(std::span<const Element> a, std::span<const Element> b) const noexcept;

  [[nodiscard]] std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}
  std::shared_ptr<const Tables> tables_;
};

/// Element bound to its field. Arithmetic between values of different
/// fields throws InputError.
class FieldValue {
 public:
  FieldValue(Field field, Element value);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] Element value() const noexcept { return value_; }

  FieldValue operator-() const;
  [[nodiscard]] FieldValue inverse() const;

  friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
  friend bool operator==(const FieldValue& a, const FieldValue& b) noexcept {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  Element value_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace gwht
