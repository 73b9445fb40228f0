#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gwht/gf.hpp"
#include "gwht/linalg.hpp"
#include "gwht/projective.hpp"
#include "gwht/spectral.hpp"

namespace gwht {

/// A linear [n, k]_q code given by a generator matrix, a parity-check matrix,
/// or both. Supplied matrices are validated to have full row rank and, when
/// both are present, H G^T = 0.
class LinearCode {
 public:
  static LinearCode from_generator(Field field, Matrix generator);
  static LinearCode from_parity(Field field, Matrix parity);
  static LinearCode from_matrices(Field field, Matrix generator, Matrix parity);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t length() const noexcept { return n_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return k_; }
  [[nodiscard]] std::size_t redundancy() const noexcept { return n_ - k_; }

  [[nodiscard]] const std::optional<Matrix>& generator() const noexcept { return generator_; }
  [[nodiscard]] const std::optional<Matrix>& parity() const noexcept { return parity_; }

  /// The supplied generator, or one derived from the parity-check matrix.
  [[nodiscard]] Matrix generator_matrix() const;
  /// The supplied parity-check matrix, or one derived from the generator.
  [[nodiscard]] Matrix parity_matrix() const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  LinearCode(Field field, std::size_t n, std::size_t k, std::optional<Matrix> generator,
             std::optional<Matrix> parity)
      : field_(std::move(field)), n_(n), k_(k), generator_(std::move(generator)),
        parity_(std::move(parity)) {}

  Field field_;
  std::size_t n_;
  std::size_t k_;
  std::optional<Matrix> generator_;
  std::optional<Matrix> parity_;
};

/// Result of deriving H from G. The construction works in place (no column
/// permutation); information_set lists the pivot columns of G's row echelon
/// form, and H restricted to the remaining columns is the identity.
struct ParityConversion {
  LinearCode code;
  std::vector<std::size_t> information_set;
};

ParityConversion parity_from_generator(const LinearCode& code);

/// chi[u] = number of generator columns proportional to point e_u of G_k.
struct CharacteristicVector {
  std::shared_ptr<const ProjectiveTable> table;
  std::vector<std::uint64_t> chi;

  [[nodiscard]] std::uint64_t length() const noexcept;  // sum chi = n
};

/// Needs a generator with no zero column. `table` may be supplied to reuse a
/// prebuilt G_k table; it must match the field and dimension.
CharacteristicVector characteristic_vector(const LinearCode& code,
                                           std::shared_ptr<const ProjectiveTable> table = nullptr);

/// h(x) = 1 iff x is a column of (H | alpha_2 H | ... | alpha_{q-1} H), as a
/// reduced spectrum over GF(q)^(n-k). Rejects zero columns and n = k.
ReducedSpectrum char_function(const LinearCode& code,
                              std::shared_ptr<const ProjectiveTable> table = nullptr);

/// H y^T.
Vector syndrome(const LinearCode& code, std::span<const Element> y);

struct CosetLeaderProfile {
  std::map<unsigned, std::uint64_t> counts;  // leader weight -> number of cosets, weight 0 included
  unsigned covering_radius = 0;

  [[nodiscard]] std::uint64_t total() const noexcept;
  friend bool operator==(const CosetLeaderProfile&, const CosetLeaderProfile&) = default;
};

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

/// Syndrome sweep over vectors of nondecreasing weight, stopping once all
/// q^(n-k) syndromes have been seen.
CosetLeaderProfile oracle_coset_profile(const LinearCode& code,
                                        std::uint64_t budget = kDefaultOracleBudget);

/// A_0..A_n by enumerating all q^k codewords.
std::vector<std::uint64_t> oracle_weight_distribution(const LinearCode& code,
                                                      std::uint64_t budget = kDefaultOracleBudget);

}  // namespace gwht
