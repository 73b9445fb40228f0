#include "gwht/analysis.hpp"

#include <stdexcept>
#include <string>

#include "gwht/errors.hpp"

namespace gwht {

std::string_view to_string(RadiusMethod method) {
  switch (method) {
    case RadiusMethod::odd_prime: return "odd_prime";
    case RadiusMethod::odd_composite: return "odd_composite";
    case RadiusMethod::even_accumulated: return "even_accumulated";
    case RadiusMethod::oracle: return "oracle";
  }
  return "unknown";
}

RadiusMethod transform_method_for(const Field& field) {
  if (field.characteristic() == 2) return RadiusMethod::even_accumulated;
  return field.is_prime() ? RadiusMethod::odd_prime : RadiusMethod::odd_composite;
}

std::uint64_t WeightDistribution::total() const noexcept {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

WeightDistribution weight_distribution(const CharacteristicVector& chi, WeightPath path) {
  const ProjectiveTable& table = *chi.table;
  const std::uint64_t n = chi.length();
  if (n == 0) throw InputError("characteristic vector is empty");
  const std::uint32_t q = table.field().order();
  std::vector<BigInt> v(chi.chi.begin(), chi.chi.end());

  std::vector<BigInt> weights;
  if (path == WeightPath::incidence) {
    weights = table.nm_times(v);
  } else {
    weights = reduced_distribution(table, v);
    const BigInt top = BigInt(q - 1) * n;
    for (BigInt& w : weights) {
      BigInt diff = top - w;
      if (diff % q != 0) throw std::logic_error("reduced distribution is not congruent mod q");
      w = diff / q;
    }
  }

  WeightDistribution out;
  out.counts.assign(n + 1, 0);
  out.counts[0] = 1;
  for (const BigInt& w : weights) {
    if (w == 0) throw InputError("generator matrix is rank deficient: a nonzero message maps to 0");
    if (w < 0 || w > n) throw std::logic_error("codeword weight out of range");
    out.counts[static_cast<std::size_t>(w)] += q - 1;
  }
  return out;
}

namespace {

// Produces the decision spectra round by round. The pointwise powers are cheap;
// only rounds that are actually tested pay for a transform.
class DecisionRounds {
 public:
  DecisionRounds(ReducedSpectrum hat_h, bool accumulate, const SpectrumObserver& observer)
      : hat_h_(std::move(hat_h)), power_(hat_h_), sum_(ReducedSpectrum::zero(hat_h_.table_ptr())),
        accumulate_(accumulate), observer_(observer) {}

  void reset() {
    power_ = hat_h_;
    sum_ = ReducedSpectrum::zero(hat_h_.table_ptr());
    j_ = 0;
  }

  void advance_to(unsigned j) {
    while (j_ < j) {
      ++j_;
      if (j_ > 1) power_ = pointwise_product(power_, hat_h_);
      if (accumulate_) sum_ += power_;
    }
  }

  ReducedSpectrum decision() {
    const ReducedSpectrum& source = accumulate_ ? sum_ : power_;
    notify((accumulate_ ? "accumulated_" : "power_") + std::to_string(j_), source);
    ReducedSpectrum s = reduced_transform(source);
    notify("decision_" + std::to_string(j_), s);
    return s;
  }

  [[nodiscard]] unsigned j() const noexcept { return j_; }

 private:
  void notify(const std::string& label, const ReducedSpectrum& f) const {
    if (observer_) observer_(label, f);
  }

  ReducedSpectrum hat_h_;
  ReducedSpectrum power_;
  ReducedSpectrum sum_;
  bool accumulate_;
  const SpectrumObserver& observer_;
  unsigned j_ = 0;
};

// Every decision value counts vectors of weight <= j (or exactly j) in a coset,
// times q^(n-k). Anything else means an arithmetic bug, not bad input.
std::size_t count_nonzero_checked(const ReducedSpectrum& s, const BigInt& q_r) {
  std::size_t nonzero = 0;
  for (const BigInt& x : s.at_points()) {
    if (x < 0 || x % q_r != 0) {
      throw std::logic_error("decision value " + to_string(x) + " is not a nonnegative multiple of " +
                             to_string(q_r));
    }
    if (x != 0) ++nonzero;
  }
  return nonzero;
}

struct Prepared {
  std::shared_ptr<const ProjectiveTable> table;
  ReducedSpectrum hat_h;
  BigInt q_r;
};

Prepared prepare(const LinearCode& code, const RadiusOptions& options) {
  auto table = options.table;
  if (!table) table = build_table(code.field(), static_cast<unsigned>(code.redundancy()), options.table_options);
  ReducedSpectrum h = char_function(code, table);
  if (options.observer) options.observer("h", h);
  ReducedSpectrum hat_h = reduced_transform(h);
  if (options.observer) options.observer("hat_h", hat_h);
  return {std::move(table), std::move(hat_h), pow(BigInt(code.field().order()), static_cast<unsigned>(code.redundancy()))};
}

}  // namespace

RadiusReport covering_radius_transform(const LinearCode& code, const RadiusOptions& options) {
  RadiusReport report;
  report.method = transform_method_for(code.field());
  if (code.redundancy() == 0) return report;
  const unsigned n = static_cast<unsigned>(code.length());
  if (options.start_j == 0) throw InputError("start_j must be at least 1");
  if (options.start_j > n) {
    throw InputError("start_j = " + std::to_string(options.start_j) + " exceeds the code length " +
                     std::to_string(n));
  }

  Prepared prep = prepare(code, options);
  DecisionRounds rounds(prep.hat_h, report.method == RadiusMethod::even_accumulated, options.observer);
  const std::size_t theta = prep.table->size();

  unsigned first = options.start_j;
  if (first > 1) {
    // The lower bound claims round start_j - 1 still misses a syndrome; verify it.
    rounds.advance_to(first - 1);
    const ReducedSpectrum s = rounds.decision();
    const std::size_t nonzero = count_nonzero_checked(s, prep.q_r);
    if (nonzero == theta) {
      report.warnings.push_back("start_j = " + std::to_string(first) +
                                " is not a lower bound (round " + std::to_string(first - 1) +
                                " already covers every syndrome); rescanning from j = 1");
      rounds.reset();
      first = 1;
    } else {
      report.per_j.push_back({first - 1, nonzero});
    }
  }

  for (unsigned j = first; j <= n; ++j) {
    rounds.advance_to(j);
    ReducedSpectrum s = rounds.decision();
    const std::size_t nonzero = count_nonzero_checked(s, prep.q_r);
    report.per_j.push_back({j, nonzero});
    if (nonzero == theta) {
      report.covering_radius = j;
      report.witness_counts = s.at_points();
      return report;
    }
  }
  throw IterationCapError("no j <= n = " + std::to_string(n) +
                          " reaches every syndrome; the parity-check matrix is probably rank deficient");
}

LeaderReport coset_leader_distribution_transform(const LinearCode& code, const RadiusOptions& options,
                                                 std::uint64_t oracle_budget) {
  LeaderReport report;
  if (code.field().characteristic() == 2) {
    report.method = RadiusMethod::oracle;
    report.profile = oracle_coset_profile(code, oracle_budget);
    report.notes.push_back("even q: per-weight leader counts come from the syndrome sweep");
    return report;
  }
  report.method = transform_method_for(code.field());
  report.profile.counts[0] = 1;
  if (code.redundancy() == 0) return report;
  if (report.method == RadiusMethod::odd_composite) {
    report.notes.push_back("odd composite q: weight-by-weight differencing applied with the trace kernel");
  }

  const unsigned n = static_cast<unsigned>(code.length());
  Prepared prep = prepare(code, options);
  const std::size_t theta = prep.table->size();
  const std::uint64_t scale = code.field().order() - 1;

  // A syndrome class first reachable at round j has leader weight j. Every
  // nonzero multiple of its syndrome is a distinct coset with the same weight.
  std::vector<bool> reached(theta, false);
  std::size_t reached_count = 0;
  DecisionRounds rounds(prep.hat_h, false, options.observer);
  for (unsigned j = 1; j <= n; ++j) {
    rounds.advance_to(j);
    const ReducedSpectrum s = rounds.decision();
    const std::size_t nonzero = count_nonzero_checked(s, prep.q_r);
    report.per_j.push_back({j, nonzero});
    std::uint64_t fresh = 0;
    for (std::size_t i = 0; i < theta; ++i) {
      const bool now = s.at_points()[i] != 0;
      if (reached[i] && !now) {
        // Odd q: F^j > 0 exactly when some vector of weight <= j has that syndrome.
        throw std::logic_error("syndrome class lost its witness between rounds");
      }
      if (now && !reached[i]) {
        reached[i] = true;
        ++fresh;
      }
    }
    reached_count += fresh;
    if (fresh > 0) report.profile.counts[j] = scale * fresh;
    if (reached_count == theta) {
      report.profile.covering_radius = j;
      return report;
    }
  }
  throw IterationCapError("no j <= n reaches every syndrome");
}

namespace {

TableOptions table_options_for(const RadiusOptions& options, const Budget& budget) {
  TableOptions out = options.table_options;
  out.max_theta = budget.max_theta;
  return out;
}

bool transform_fits(const Field& field, std::size_t dimension, const Budget& budget) {
  try {
    return theta(field.order(), static_cast<unsigned>(dimension)) <= budget.max_theta;
  } catch (const BudgetError&) {
    return false;
  }
}

}  // namespace

RadiusReport covering_radius(const LinearCode& code, Method method, RadiusOptions options, Budget budget) {
  if (method == Method::automatic) {
    method = transform_fits(code.field(), code.redundancy(), budget) ? Method::transform : Method::oracle;
  }
  if (method == Method::transform) {
    options.table_options = table_options_for(options, budget);
    return covering_radius_transform(code, options);
  }
  const CosetLeaderProfile profile = oracle_coset_profile(code, budget.max_space);
  RadiusReport report;
  report.method = RadiusMethod::oracle;
  report.covering_radius = profile.covering_radius;
  return report;
}

LeaderReport coset_leaders(const LinearCode& code, Method method, RadiusOptions options, Budget budget) {
  if (method == Method::automatic) {
    method = transform_fits(code.field(), code.redundancy(), budget) ? Method::transform : Method::oracle;
  }
  if (method == Method::transform) {
    options.table_options = table_options_for(options, budget);
    return coset_leader_distribution_transform(code, options, budget.max_space);
  }
  LeaderReport report;
  report.method = RadiusMethod::oracle;
  report.profile = oracle_coset_profile(code, budget.max_space);
  return report;
}

WeightDistribution weight_distribution(const LinearCode& code, Method method, Budget budget) {
  if (method == Method::automatic) {
    method = transform_fits(code.field(), code.dimension(), budget) ? Method::transform : Method::oracle;
  }
  if (method == Method::transform) {
    TableOptions opts;
    opts.max_theta = budget.max_theta;
    return weight_distribution(characteristic_vector(code, build_table(code.field(),
                                                                       static_cast<unsigned>(code.dimension()), opts)));
  }
  return {oracle_weight_distribution(code, budget.max_space)};
}

}  // namespace gwht
