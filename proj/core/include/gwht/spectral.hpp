#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gwht/bigint.hpp"
#include "gwht/cyclotomic.hpp"
#include "gwht/gf.hpp"
#include "gwht/projective.hpp"

namespace gwht {

// ---------------------------------------------------------------------------
// The full domain GF(q)^s, ordered lexicographically with the leftmost
// coordinate most significant and field elements in index order.

std::uint64_t domain_size(const Field& field, unsigned arity);
Vector decode_point(const Field& field, unsigned arity, std::uint64_t index);
std::uint64_t encode_point(const Field& field, std::span<const Element> x);

/// Tr(omega . x) as an exponent in [0, p). For prime fields this is
/// (omega . x) mod p.
std::uint32_t kernel_exponent(const Field& field, std::span<const Element> omega,
                              std::span<const Element> x);

/// xi^(omega . x) for a prime field. Throws InputError for composite fields.
CyclotomicInteger vc_kernel(const Field& field, std::span<const Element> omega,
                            std::span<const Element> x);

/// zeta^Tr(omega . x), zeta a primitive p-th root of unity. Valid for any field.
CyclotomicInteger trace_kernel(const Field& field, std::span<const Element> omega,
                               std::span<const Element> x);

/// Exponent matrix of the q^s x q^s transform kernel, row omega, column x.
std::vector<std::uint32_t> kernel_exponents(const Field& field, unsigned arity);

/// A function GF(q)^s -> Z[zeta_p], stored as its truth table.
class FullSpectrum {
 public:
  FullSpectrum(Field field, unsigned arity, std::vector<CyclotomicInteger> values);
  static FullSpectrum from_integers(Field field, unsigned arity, std::span<const BigInt> values);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] unsigned arity() const noexcept { return arity_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<CyclotomicInteger>& values() const noexcept { return values_; }
  [[nodiscard]] const CyclotomicInteger& operator[](std::size_t i) const noexcept { return values_[i]; }
  [[nodiscard]] const CyclotomicInteger& at(std::span<const Element> x) const {
    return values_[encode_point(field_, x)];
  }

  friend bool operator==(const FullSpectrum& a, const FullSpectrum& b) {
    return a.arity_ == b.arity_ && a.field_ == b.field_ && a.values_ == b.values_;
  }

 private:
  Field field_;
  unsigned arity_;
  std::vector<CyclotomicInteger> values_;
};

enum class TransformAlgorithm {
  butterfly,  // s rounds of radix-q butterflies along each coordinate
  naive,      // direct kernel-matrix apply, O(q^(2s))
};

inline constexpr std::uint64_t kDefaultFullBudget = std::uint64_t{1} << 24;

/// hat h(omega) = sum_x h(x) zeta^Tr(omega . x), exact. `budget` caps the
/// total number of stored coefficients, q^s (p - 1).
FullSpectrum transform_full(const FullSpectrum& h,
                            TransformAlgorithm algorithm = TransformAlgorithm::butterfly,
                            std::uint64_t budget = kDefaultFullBudget);

// ---------------------------------------------------------------------------
// Compositions and the reduced distribution.

struct Composition {
  std::vector<BigInt> mu;  // mu[u] = sum of v_j over positions with m_j = alpha_u

  /// (mu_0 - mu_1, ..., mu_0 - mu_{q-1}).
  [[nodiscard]] std::vector<BigInt> reduced() const;
};

Composition composition(const Field& field, std::span<const Element> row,
                        std::span<const BigInt> v);

/// r(v) = [(q-1) J - q N(M_k)] v^T.
std::vector<BigInt> reduced_distribution(const ProjectiveTable& table, std::span<const BigInt> v);

// ---------------------------------------------------------------------------
// Proportionality-invariant functions on GF(q)^s: the value at 0 plus one
// value per projective point.

class ReducedSpectrum {
 public:
  ReducedSpectrum(std::shared_ptr<const ProjectiveTable> table, BigInt at_zero,
                  std::vector<BigInt> at_points);
  static ReducedSpectrum zero(std::shared_ptr<const ProjectiveTable> table);

  /// Restriction of a full function. Throws InputError unless the function is
  /// integer valued and constant on proportionality classes.
  static ReducedSpectrum from_full(std::shared_ptr<const ProjectiveTable> table,
                                   const FullSpectrum& full);
  [[nodiscard]] FullSpectrum to_full(std::uint64_t budget = kDefaultFullBudget) const;

  [[nodiscard]] const ProjectiveTable& table() const noexcept { return *table_; }
  [[nodiscard]] const std::shared_ptr<const ProjectiveTable>& table_ptr() const noexcept { return table_; }
  [[nodiscard]] const BigInt& at_zero() const noexcept { return at_zero_; }
  [[nodiscard]] const std::vector<BigInt>& at_points() const noexcept { return at_points_; }
  /// Value at an arbitrary vector of GF(q)^s.
  [[nodiscard]] const BigInt& value(std::span<const Element> x) const;

  ReducedSpectrum& operator+=(const ReducedSpectrum& other);

  friend bool operator==(const ReducedSpectrum& a, const ReducedSpectrum& b) {
    return *a.table_ == *b.table_ && a.at_zero_ == b.at_zero_ && a.at_points_ == b.at_points_;
  }

 private:
  std::shared_ptr<const ProjectiveTable> table_;
  BigInt at_zero_;
  std::vector<BigInt> at_points_;
};

/// hat f(0) = f(0) + (q-1) sum_i f(e_i);  hat f(e_i) = f(0) + (R f)_i.
ReducedSpectrum reduced_transform(const ReducedSpectrum& f);
/// Same, but first checks that f lives on `table`.
ReducedSpectrum reduced_transform(const ProjectiveTable& table, const ReducedSpectrum& f);

ReducedSpectrum pointwise_power(const ReducedSpectrum& f, unsigned j);
ReducedSpectrum pointwise_product(const ReducedSpectrum& a, const ReducedSpectrum& b);

// ---------------------------------------------------------------------------
// Text dumps: one line per domain point, "(x1,...,xs) value".

std::string format_point(std::span<const Element> x);
void write_spectrum(std::ostream& os, const ReducedSpectrum& f);
void write_spectrum(std::ostream& os, const FullSpectrum& f);

}  // namespace gwht
