#include "gwht/projective.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "gwht/detail/int_kernels.hpp"
#include "gwht/errors.hpp"

namespace gwht {

std::uint64_t theta(std::uint64_t q, unsigned k) {
  if (q < 2) throw InputError("theta: q must be at least 2");
  if (k == 0) return 0;
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (sum > std::numeric_limits<std::uint64_t>::max() - power) {
      throw BudgetError("theta(q, k) overflows 64 bits");
    }
    sum += power;
    if (i + 1 < k) {
      if (power > std::numeric_limits<std::uint64_t>::max() / q) {
        throw BudgetError("theta(q, k) overflows 64 bits");
      }
      power *= q;
    }
  }
  return sum;  // 1 + q + ... + q^(k-1)
}

std::shared_ptr<const ProjectiveTable> ProjectiveTable::build(Field field, unsigned k,
                                                              TableOptions options) {
  return std::shared_ptr<const ProjectiveTable>(new ProjectiveTable(std::move(field), k, options));
}

std::shared_ptr<const ProjectiveTable> build_table(const Field& field, unsigned k,
                                                   TableOptions options) {
  return ProjectiveTable::build(field, k, options);
}

ProjectiveTable::ProjectiveTable(Field field, unsigned k, TableOptions options)
    : field_(std::move(field)), k_(k), theta_(0), options_(options) {
  if (k == 0) throw InputError("projective table needs dimension k >= 1");
  const std::uint32_t q = field_.order();
  const std::uint64_t t = theta(q, k);
  if (t > options_.max_theta) {
    throw BudgetError("theta(" + std::to_string(q) + ", " + std::to_string(k) + ") = " +
                      std::to_string(t) + " exceeds budget " + std::to_string(options_.max_theta));
  }
  theta_ = static_cast<std::size_t>(t);
  theta_by_level_.resize(k + 1);
  for (unsigned level = 0; level <= k; ++level) theta_by_level_[level] = theta(q, level);

  // G_1 = (1); G_L = [ u . 1 ; G_{L-1} ] for u = alpha_0 .. alpha_{q-1}, then (1, 0, ..., 0).
  // Level-L columns occupy the last L coordinates of each stored point.
  points_.assign(theta_ * k, Field::zero());
  std::vector<Element> prev{Field::one()};
  for (unsigned level = 2; level <= k; ++level) {
    const std::size_t prev_count = theta_by_level_[level - 1];
    const unsigned prev_len = level - 1;
    std::vector<Element> next;
    next.reserve(theta_by_level_[level] * level);
    for (std::uint32_t u = 0; u < q; ++u) {
      for (std::size_t c = 0; c < prev_count; ++c) {
        next.push_back(Element{u});
        next.insert(next.end(), prev.begin() + c * prev_len, prev.begin() + (c + 1) * prev_len);
      }
    }
    next.push_back(Field::one());
    next.insert(next.end(), prev_len, Field::zero());
    prev = std::move(next);
  }
  points_ = std::move(prev);
  words_per_row_ = (theta_ + 63) / 64;
}

PointRef ProjectiveTable::point_index(std::span<const Element> v) const {
  if (v.size() != k_) {
    throw InputError("point has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(k_));
  }
  std::size_t last = k_;
  for (std::size_t i = k_; i-- > 0;) {
    if (!v[i].is_zero()) {
      last = i;
      break;
    }
  }
  if (last == k_) throw InputError("the zero vector is not a projective point");
  const Element scalar = v[last];
  const Element unscale = field_.inv(scalar);

  // Closed-form rank in the recursion order: the leading coordinate u selects
  // a block of theta(q, rest) columns, and a vector whose tail is zero is the
  // trailing (1, 0, ..., 0) column of its level.
  std::size_t index = 0;
  for (std::size_t pos = 0; pos < last; ++pos) {
    const Element c = field_.mul(v[pos], unscale);
    index += static_cast<std::size_t>(c.index()) * theta_by_level_[k_ - pos - 1];
  }
  index += theta_by_level_[k_ - last] - 1;
  return {index, scalar};
}

Element ProjectiveTable::inner_product(std::size_t i, std::size_t j) const noexcept {
  return field_.dot(point(i), point(j));
}

void ProjectiveTable::dots_with_points(std::span<const Element> a, std::span<Element> out,
                                       std::vector<Element>& scratch) const {
  // D_L holds a[k-L..] . c for every level-L column c.
  const std::uint32_t q = field_.order();
  scratch.resize(theta_);
  std::span<Element> cur = out;
  std::span<Element> nxt{scratch};
  // Ping-pong so the final level lands in `out`.
  if (k_ % 2 == 0) std::swap(cur, nxt);
  cur[0] = a[k_ - 1];
  std::vector<Element> scaled(q);
  for (unsigned level = 2; level <= k_; ++level) {
    const Element lead = a[k_ - level];
    const std::size_t prev_count = theta_by_level_[level - 1];
    for (std::uint32_t u = 0; u < q; ++u) scaled[u] = field_.mul(lead, Element{u});
    for (std::uint32_t u = 0; u < q; ++u) {
      Element* dst = nxt.data() + u * prev_count;
      const Element s = scaled[u];
      for (std::size_t c = 0; c < prev_count; ++c) dst[c] = field_.add(s, cur[c]);
    }
    nxt[q * prev_count] = lead;
    std::swap(cur, nxt);
  }
}

void ProjectiveTable::product_row(std::size_t i, std::span<Element> out) const {
  if (out.size() != theta_) throw std::invalid_argument("product_row: output has wrong length");
  std::vector<Element> scratch;
  dots_with_points(point(i), out, scratch);
}

const std::vector<std::uint64_t>& ProjectiveTable::incidence_bits() const {
  std::call_once(incidence_once_, [this] {
    incidence_.assign(theta_ * words_per_row_, 0);
    std::vector<Element> row(theta_);
    std::vector<Element> scratch;
    for (std::size_t i = 0; i < theta_; ++i) {
      dots_with_points(point(i), row, scratch);
      std::uint64_t* bits = incidence_.data() + i * words_per_row_;
      for (std::size_t j = 0; j < theta_; ++j) {
        if (!row[j].is_zero()) bits[j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  });
  return incidence_;
}

namespace {

// out_i = sum_{j : bit (i,j) clear} v_j, i.e. the sum over points orthogonal
// to e_i. Roughly a 1/q fraction of bits are clear, so iterating them is
// cheaper than iterating the set ones.
template <class T>
std::vector<T> orthogonal_sums(const std::vector<std::uint64_t>& bits, std::size_t theta,
                               std::size_t words, const std::vector<T>& v) {
  std::vector<T> out(theta, T{0});
  const std::uint64_t tail_mask =
      theta % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (theta % 64)) - 1;
  for (std::size_t i = 0; i < theta; ++i) {
    const std::uint64_t* row = bits.data() + i * words;
    T sum{0};
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t zeros = ~row[w];
      if (w + 1 == words) zeros &= tail_mask;
      while (zeros != 0) {
        const int b = std::countr_zero(zeros);
        sum += v[w * 64 + static_cast<std::size_t>(b)];
        zeros &= zeros - 1;
      }
    }
    out[i] = sum;
  }
  return out;
}

template <class T>
std::vector<BigInt> dense_nm_times(const std::vector<std::uint64_t>& bits, std::size_t theta,
                                   std::size_t words, std::span<const BigInt> v) {
  std::vector<T> narrow_v(v.size());
  T total{0};
  for (std::size_t j = 0; j < v.size(); ++j) {
    narrow_v[j] = detail::narrow<T>(v[j]);
    total += narrow_v[j];
  }
  const std::vector<T> orth = orthogonal_sums(bits, theta, words, narrow_v);
  std::vector<BigInt> out(theta);
  for (std::size_t i = 0; i < theta; ++i) out[i] = detail::widen<T>(T{total - orth[i]});
  return out;
}

}  // namespace

std::vector<BigInt> ProjectiveTable::nm_times(std::span<const BigInt> v) const {
  if (v.size() != theta_) {
    throw InputError("vector length " + std::to_string(v.size()) + " does not match theta = " +
                     std::to_string(theta_));
  }
  std::size_t nonzeros = 0;
  BigInt magnitude = 0;
  for (const BigInt& x : v) {
    if (x != 0) {
      ++nonzeros;
      magnitude += abs(x);
    }
  }

  std::vector<BigInt> out(theta_, BigInt{0});
  // Sparse inputs (characteristic vectors and functions): accumulate one
  // column per nonzero entry, using the symmetry of N(M_k).
  if (!materializes_incidence() || nonzeros * 32 <= theta_) {
    std::vector<Element> column(theta_);
    std::vector<Element> scratch;
    for (std::size_t j = 0; j < theta_; ++j) {
      if (v[j] == 0) continue;
      dots_with_points(point(j), column, scratch);
      for (std::size_t i = 0; i < theta_; ++i) {
        if (!column[i].is_zero()) out[i] += v[j];
      }
    }
    return out;
  }

  const auto& bits = incidence_bits();
  switch (detail::width_for(magnitude)) {
    case detail::Width::i64:
      return dense_nm_times<std::int64_t>(bits, theta_, words_per_row_, v);
    case detail::Width::i128:
      return dense_nm_times<detail::Int128>(bits, theta_, words_per_row_, v);
    case detail::Width::big:
      break;
  }
  return dense_nm_times<BigInt>(bits, theta_, words_per_row_, v);
}

std::vector<BigInt> ProjectiveTable::r_times(std::span<const BigInt> v) const {
  std::vector<BigInt> nm = nm_times(v);
  BigInt total = 0;
  for (const BigInt& x : v) total += x;
  const BigInt q = field_.order();
  const BigInt base = (q - 1) * total;
  for (BigInt& x : nm) x = base - q * x;
  return nm;
}

}  // namespace gwht
