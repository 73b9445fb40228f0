#include "gwht/code.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gwht/errors.hpp"

namespace gwht {

namespace {

void check_entries(const Field& field, const Matrix& m, const char* what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (Element e : m.row(r)) {
      if (!field.contains(e)) {
        throw InputError(std::string(what) + " entry " + std::to_string(e.index()) +
                         " out of range for " + field.name());
      }
    }
  }
}

void check_full_rank(const Field& field, const Matrix& m, const char* what) {
  if (m.rows() > m.cols() || rank(field, m) != m.rows()) {
    throw InputError(std::string(what) + " matrix does not have full row rank");
  }
}

std::shared_ptr<const ProjectiveTable> table_for(const Field& field, std::size_t k,
                                                 std::shared_ptr<const ProjectiveTable> table) {
  if (!table) return build_table(field, static_cast<unsigned>(k));
  if (!(table->field() == field) || table->dimension() != k) {
    throw InputError("supplied projective table does not match the code");
  }
  return table;
}

}  // namespace

LinearCode LinearCode::from_generator(Field field, Matrix generator) {
  check_entries(field, generator, "generator");
  check_full_rank(field, generator, "generator");
  const std::size_t n = generator.cols();
  const std::size_t k = generator.rows();
  return LinearCode(std::move(field), n, k, std::move(generator), std::nullopt);
}

LinearCode LinearCode::from_parity(Field field, Matrix parity) {
  check_entries(field, parity, "parity-check");
  check_full_rank(field, parity, "parity-check");
  const std::size_t n = parity.cols();
  const std::size_t k = n - parity.rows();
  return LinearCode(std::move(field), n, k, std::nullopt, std::move(parity));
}

LinearCode LinearCode::from_matrices(Field field, Matrix generator, Matrix parity) {
  check_entries(field, generator, "generator");
  check_entries(field, parity, "parity-check");
  check_full_rank(field, generator, "generator");
  check_full_rank(field, parity, "parity-check");
  if (generator.cols() != parity.cols() || generator.rows() + parity.rows() != generator.cols()) {
    throw InputError("generator and parity-check matrices have incompatible shapes");
  }
  const Matrix product = multiply_transpose(field, parity, generator);
  for (std::size_t r = 0; r < product.rows(); ++r) {
    if (!is_zero(product.row(r))) throw InputError("H G^T is not zero");
  }
  const std::size_t n = generator.cols();
  const std::size_t k = generator.rows();
  return LinearCode(std::move(field), n, k, std::move(generator), std::move(parity));
}

Matrix LinearCode::generator_matrix() const {
  if (generator_) return *generator_;
  return null_space(field_, *parity_);
}

Matrix LinearCode::parity_matrix() const {
  if (parity_) return *parity_;
  return null_space(field_, *generator_);
}

ParityConversion parity_from_generator(const LinearCode& code) {
  const Matrix g = code.generator_matrix();
  RowEchelon ech = row_reduce(code.field(), g);
  if (ech.pivots.size() != g.rows()) throw InputError("generator matrix is rank deficient");
  Matrix h = null_space(code.field(), g);
  return {LinearCode::from_matrices(code.field(), g, std::move(h)), std::move(ech.pivots)};
}

std::uint64_t CharacteristicVector::length() const noexcept {
  return std::accumulate(chi.begin(), chi.end(), std::uint64_t{0});
}

CharacteristicVector characteristic_vector(const LinearCode& code,
                                           std::shared_ptr<const ProjectiveTable> table) {
  if (code.dimension() == 0) throw InputError("the zero code has no characteristic vector");
  const Matrix g = code.generator_matrix();
  table = table_for(code.field(), code.dimension(), std::move(table));
  CharacteristicVector out{table, std::vector<std::uint64_t>(table->size(), 0)};
  for (std::size_t c = 0; c < g.cols(); ++c) {
    const Vector column = g.column(c);
    if (is_zero(column)) {
      throw InputError("generator column " + std::to_string(c + 1) +
                       " is zero; strip zero coordinates first");
    }
    ++out.chi[table->point_index(column).index];
  }
  return out;
}

ReducedSpectrum char_function(const LinearCode& code, std::shared_ptr<const ProjectiveTable> table) {
  if (code.redundancy() == 0) throw InputError("a code with n = k has no parity-check function");
  const Matrix h = code.parity_matrix();
  table = table_for(code.field(), code.redundancy(), std::move(table));
  std::vector<BigInt> points(table->size(), BigInt{0});
  for (std::size_t c = 0; c < h.cols(); ++c) {
    const Vector column = h.column(c);
    if (is_zero(column)) {
      throw InputError("parity-check column " + std::to_string(c + 1) +
                       " is zero; strip that coordinate first");
    }
    points[table->point_index(column).index] = 1;
  }
  return ReducedSpectrum(std::move(table), BigInt{0}, std::move(points));
}

Vector syndrome(const LinearCode& code, std::span<const Element> y) {
  if (y.size() != code.length()) {
    throw InputError("vector has length " + std::to_string(y.size()) + ", code length is " +
                     std::to_string(code.length()));
  }
  return multiply(code.field(), code.parity_matrix(), y);
}

std::uint64_t CosetLeaderProfile::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& [weight, count] : counts) sum += count;
  return sum;
}

namespace {

class SyndromeSweep {
 public:
  SyndromeSweep(const Field& field, const Matrix& h)
      : field_(field), n_(h.cols()), r_(h.rows()), q_(field.order()),
        scaled_columns_(n_ * q_ * r_), stack_((n_ + 1) * r_) {
    for (std::size_t c = 0; c < n_; ++c) {
      for (std::uint32_t a = 1; a < q_; ++a) {
        for (std::size_t i = 0; i < r_; ++i) {
          scaled_columns_[(c * q_ + a) * r_ + i] = field.mul(Element{a}, h(i, c));
        }
      }
    }
  }

  CosetLeaderProfile run(std::uint64_t total) {
    seen_.assign(total, false);
    remaining_ = total;
    CosetLeaderProfile profile;
    mark(0, profile);  // the code itself, leader weight 0
    for (unsigned w = 1; w <= n_ && remaining_ > 0; ++w) {
      target_ = w;
      visit(0, 0, profile);
    }
    profile.covering_radius = profile.counts.rbegin()->first;
    return profile;
  }

 private:
  void mark(std::uint64_t index, CosetLeaderProfile& profile) {
    if (seen_[index]) return;
    seen_[index] = true;
    --remaining_;
    ++profile.counts[target_];
  }

  void visit(std::size_t start, unsigned depth, CosetLeaderProfile& profile) {
    const Element* cur = stack_.data() + depth * r_;
    if (depth == target_) {
      std::uint64_t index = 0;
      for (std::size_t i = 0; i < r_; ++i) index = index * q_ + cur[i].index();
      mark(index, profile);
      return;
    }
    Element* next = stack_.data() + (depth + 1) * r_;
    for (std::size_t pos = start; pos + (target_ - depth) <= n_ && remaining_ > 0; ++pos) {
      for (std::uint32_t a = 1; a < q_ && remaining_ > 0; ++a) {
        const Element* col = scaled_columns_.data() + (pos * q_ + a) * r_;
        for (std::size_t i = 0; i < r_; ++i) next[i] = field_.add(cur[i], col[i]);
        visit(pos + 1, depth + 1, profile);
      }
    }
  }

  const Field& field_;
  std::size_t n_;
  std::size_t r_;
  std::uint32_t q_;
  std::vector<Element> scaled_columns_;
  std::vector<Element> stack_;
  std::vector<bool> seen_;
  std::uint64_t remaining_ = 0;
  unsigned target_ = 0;
};

}  // namespace

CosetLeaderProfile oracle_coset_profile(const LinearCode& code, std::uint64_t budget) {
  if (code.redundancy() == 0) return {{{0, 1}}, 0};
  const std::uint64_t total = checked_pow(code.field().order(), static_cast<unsigned>(code.redundancy()));
  if (total > budget) {
    throw BudgetError("syndrome space q^(n-k) = " + std::to_string(total) + " exceeds budget " +
                      std::to_string(budget));
  }
  return SyndromeSweep(code.field(), code.parity_matrix()).run(total);
}

std::vector<std::uint64_t> oracle_weight_distribution(const LinearCode& code, std::uint64_t budget) {
  const Field& field = code.field();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  const std::uint32_t q = field.order();
  const std::uint64_t total = checked_pow(q, static_cast<unsigned>(k));
  if (total > budget) {
    throw BudgetError("code size q^k = " + std::to_string(total) + " exceeds budget " +
                      std::to_string(budget));
  }
  const Matrix g = code.generator_matrix();
  std::vector<Element> scaled(k * q * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::size_t c = 0; c < n; ++c) scaled[(i * q + a) * n + c] = field.mul(Element{a}, g(i, c));
    }
  }

  std::vector<std::uint64_t> dist(n + 1, 0);
  // words[level] = sum_{i < level} m_i G_i along the current branch.
  std::vector<Element> words((k + 1) * n, Field::zero());
  auto enumerate = [&](auto&& self, std::size_t level) -> void {
    const Element* src = words.data() + level * n;
    if (level == k) {
      const auto weight = std::count_if(src, src + n, [](Element e) { return !e.is_zero(); });
      ++dist[static_cast<std::size_t>(weight)];
      return;
    }
    Element* dst = words.data() + (level + 1) * n;
    for (std::uint32_t a = 0; a < q; ++a) {
      const Element* row = scaled.data() + (level * q + a) * n;
      for (std::size_t c = 0; c < n; ++c) dst[c] = field.add(src[c], row[c]);
      self(self, level + 1);
    }
  };
  enumerate(enumerate, 0);
  return dist;
}

}  // namespace gwht
