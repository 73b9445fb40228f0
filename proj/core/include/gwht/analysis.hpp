#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gwht/bigint.hpp"
#include "gwht/code.hpp"
#include "gwht/projective.hpp"
#include "gwht/spectral.hpp"

namespace gwht {

enum class RadiusMethod {
  odd_prime,         // Vilenkin-Chrestenson kernel, q an odd prime
  odd_composite,     // trace kernel, q = p^l with p odd
  even_accumulated,  // trace kernel on g_j = sum_{i<=j} hat h^i, q = 2^l
  oracle,            // syndrome sweep
};

std::string_view to_string(RadiusMethod method);

/// The transform method that applies to a field.
RadiusMethod transform_method_for(const Field& field);

struct RoundSummary {
  unsigned j = 0;
  std::size_t nonzero = 0;  // projective syndrome classes with a nonzero decision value
  friend bool operator==(const RoundSummary&, const RoundSummary&) = default;
};

struct RadiusReport {
  unsigned covering_radius = 0;
  std::vector<RoundSummary> per_j;
  /// Decision values l_y q^(n-k) at each point for the final j.
  std::vector<BigInt> witness_counts;
  RadiusMethod method = RadiusMethod::oracle;
  std::vector<std::string> warnings;
};

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // A_0 .. A_n
  [[nodiscard]] std::uint64_t total() const noexcept;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

enum class WeightPath {
  reduced,    // w = ((q-1) n 1 - r(chi)) / q
  incidence,  // w = N(M_k) chi directly
};

/// A_w from the weights w_i of the theta pairwise non-proportional codewords
/// G_k^T G, each standing for q - 1 codewords.
WeightDistribution weight_distribution(const CharacteristicVector& chi,
                                       WeightPath path = WeightPath::reduced);

/// Called with a label ("h", "hat_h", "power_3", "accumulated_3",
/// "decision_3", ...) and the spectrum produced at that step.
using SpectrumObserver = std::function<void(const std::string& label, const ReducedSpectrum&)>;

struct RadiusOptions {
  /// Known lower bound on the covering radius. It is checked with one extra
  /// round; a bound that turns out too large triggers a warning and a rescan.
  unsigned start_j = 1;
  /// Prebuilt G_(n-k) table to reuse across codes of the same shape.
  std::shared_ptr<const ProjectiveTable> table;
  TableOptions table_options;
  SpectrumObserver observer;
};

/// Least j such that the decision spectrum is nonzero at every projective
/// point. Throws InputError for zero columns in H and IterationCapError if no
/// j <= n works.
RadiusReport covering_radius_transform(const LinearCode& code, const RadiusOptions& options = {});

struct LeaderReport {
  CosetLeaderProfile profile;
  RadiusMethod method = RadiusMethod::oracle;
  std::vector<RoundSummary> per_j;
  std::vector<std::string> notes;
};

/// Coset-leader weight distribution from the rounds at which each syndrome
/// class first becomes reachable. Odd q only; even q falls back to the
/// syndrome sweep and says so in `notes`.
LeaderReport coset_leader_distribution_transform(const LinearCode& code,
                                                 const RadiusOptions& options = {},
                                                 std::uint64_t oracle_budget = kDefaultOracleBudget);

enum class Method { automatic, transform, oracle };

struct Budget {
  std::uint64_t max_theta = std::uint64_t{1} << 22;  // reduced-domain size
  std::uint64_t max_space = std::uint64_t{1} << 24;  // q^(n-k) or q^k for the oracles
};

/// automatic uses the transform when theta(q, n-k) fits the budget, else the oracle.
RadiusReport covering_radius(const LinearCode& code, Method method, RadiusOptions options = {},
                             Budget budget = {});
LeaderReport coset_leaders(const LinearCode& code, Method method, RadiusOptions options = {},
                           Budget budget = {});
WeightDistribution weight_distribution(const LinearCode& code, Method method, Budget budget = {});

}  // namespace gwht
