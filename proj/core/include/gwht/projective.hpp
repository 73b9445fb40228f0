#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "gwht/bigint.hpp"
#include "gwht/gf.hpp"

namespace gwht {

/// theta(q, k) = (q^k - 1) / (q - 1), the number of points of PG(k-1, q).
std::uint64_t theta(std::uint64_t q, unsigned k);

struct TableOptions {
  std::uint64_t max_theta = std::uint64_t{1} << 22;
  // Above this the N(M_k) bit matrix is not stored and rows are regenerated
  // for every dense product.
  std::uint64_t max_materialized_theta = std::uint64_t{1} << 15;
};

/// A point reference: v = scalar * point(index). Indices are 0-based.
struct PointRef {
  std::size_t index = 0;
  Element scalar;
  friend bool operator==(const PointRef&, const PointRef&) = default;
};

/// The columns e_0 .. e_{theta-1} of the simplex generator G_k, in recursion
/// order, with the incidence data N(M_k) (1 where e_i . e_j != 0) and
/// R = (q-1) J - q N(M_k).
///
/// Every point is normalised so its last nonzero coordinate is 1, which is the
/// form the recursion produces. N(M_k) is bit-packed and built lazily on the
/// first dense product; R is never stored.
class ProjectiveTable {
 public:
  static std::shared_ptr<const ProjectiveTable> build(Field field, unsigned k,
                                                      TableOptions options = {});

  ProjectiveTable(const ProjectiveTable&) = delete;
  ProjectiveTable& operator=(const ProjectiveTable&) = delete;

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] unsigned dimension() const noexcept { return k_; }
  [[nodiscard]] std::size_t size() const noexcept { return theta_; }

  [[nodiscard]] std::span<const Element> point(std::size_t i) const noexcept {
    return {points_.data() + i * k_, k_};
  }

  /// Locates the point proportional to v. Throws InputError for the zero
  /// vector or a length mismatch.
  [[nodiscard]] PointRef point_index(std::span<const Element> v) const;

  /// Entry (i, j) of M_k = G_k^T G_k.
  [[nodiscard]] Element inner_product(std::size_t i, std::size_t j) const noexcept;
  [[nodiscard]] bool nonzero_product(std::size_t i, std::size_t j) const noexcept {
    return !inner_product(i, j).is_zero();
  }
  [[nodiscard]] std::int64_t r_entry(std::size_t i, std::size_t j) const noexcept {
    return nonzero_product(i, j) ? -1 : static_cast<std::int64_t>(field_.order()) - 1;
  }

  /// Row i of M_k computed through the G_k recursion in O(theta).
  void product_row(std::size_t i, std::span<Element> out) const;

  /// N(M_k) v over the integers.
  [[nodiscard]] std::vector<BigInt> nm_times(std::span<const BigInt> v) const;
  /// R v = (q-1)(sum v) 1 - q N(M_k) v.
  [[nodiscard]] std::vector<BigInt> r_times(std::span<const BigInt> v) const;

  /// Whether the N(M_k) bit matrix is (or would be) stored.
  [[nodiscard]] bool materializes_incidence() const noexcept {
    return theta_ <= options_.max_materialized_theta;
  }

  friend bool operator==(const ProjectiveTable& a, const ProjectiveTable& b) noexcept {
    return a.k_ == b.k_ && a.field_ == b.field_;
  }

 private:
  ProjectiveTable(Field field, unsigned k, TableOptions options);
  void dots_with_points(std::span<const Element> a, std::span<Element> out,
                        std::vector<Element>& scratch) const;
  const std::vector<std::uint64_t>& incidence_bits() const;

  Field field_;
  unsigned k_;
  std::size_t theta_;
  TableOptions options_;
  std::vector<Element> points_;             // theta x k, row-major
  std::vector<std::size_t> theta_by_level_;  // theta(q, 0..k)

  mutable std::once_flag incidence_once_;
  mutable std::vector<std::uint64_t> incidence_;  // theta rows of words_per_row_
  std::size_t words_per_row_ = 0;
};

std::shared_ptr<const ProjectiveTable> build_table(const Field& field, unsigned k,
                                                   TableOptions options = {});

inline PointRef point_index(const ProjectiveTable& table, std::span<const Element> v) {
  return table.point_index(v);
}

}  // namespace gwht
