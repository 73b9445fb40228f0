#pragma once

// Shared fixtures: random codes and brute-force oracles written without the
// library's fast paths (no projective tables, no syndrome DFS, no butterflies).

#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gwht/analysis.hpp"
#include "gwht/code.hpp"
#include "gwht/cyclotomic.hpp"
#include "gwht/gf.hpp"
#include "gwht/linalg.hpp"
#include "gwht/spectral.hpp"

namespace gwht::testing {

using Rng = std::mt19937_64;

inline std::string data_path(const std::string& name) { return std::string(GWHT_TEST_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Matrix matrix_of(std::size_t rows, std::size_t cols, std::initializer_list<std::uint32_t> values) {
  std::vector<Element> data;
  for (std::uint32_t v : values) data.emplace_back(v);
  return Matrix(rows, cols, std::move(data));
}

inline LinearCode ternary63_code() {
  return LinearCode::from_parity(Field::of_order(3), matrix_of(3, 6, {0, 0, 2, 1, 0, 0,  //
                                                                      0, 1, 0, 0, 1, 0,  //
                                                                      1, 0, 0, 0, 0, 1}));
}

inline LinearCode hamming74() {
  return LinearCode::from_parity(Field::of_order(2), matrix_of(3, 7, {1, 0, 1, 0, 1, 0, 1,  //
                                                                      0, 1, 1, 0, 0, 1, 1,  //
                                                                      0, 0, 0, 1, 1, 1, 1}));
}

inline std::vector<BigInt> integers(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

inline Element random_element(Rng& rng, const Field& field, bool nonzero = false) {
  std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, field.order() - 1);
  return Element{d(rng)};
}

inline Matrix random_matrix(Rng& rng, const Field& field, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(rng, field);
  }
  return m;
}

// Full row rank and no zero column.
inline Matrix random_usable_matrix(Rng& rng, const Field& field, std::size_t rows, std::size_t cols) {
  for (;;) {
    Matrix m = random_matrix(rng, field, rows, cols);
    bool zero_column = false;
    for (std::size_t c = 0; c < cols && !zero_column; ++c) zero_column = is_zero(m.column(c));
    if (!zero_column && rank(field, m) == rows) return m;
  }
}

inline LinearCode random_parity_code(Rng& rng, const Field& field, std::size_t n, std::size_t r) {
  return LinearCode::from_parity(field, random_usable_matrix(rng, field, r, n));
}

inline LinearCode random_generator_code(Rng& rng, const Field& field, std::size_t n, std::size_t k) {
  return LinearCode::from_generator(field, random_usable_matrix(rng, field, k, n));
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

inline Vector digits(std::uint64_t index, std::uint32_t q, std::size_t len) {
  Vector out(len);
  for (std::size_t i = len; i-- > 0;) {
    out[i] = Element{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return out;
}

inline std::uint64_t undigits(const Vector& v, std::uint32_t q) {
  std::uint64_t index = 0;
  for (Element e : v) index = index * q + e.index();
  return index;
}

// Breadth-first search over the syndrome space: the distance of s from 0 in
// the Cayley graph generated by nonzero multiples of H's columns is the
// weight of its coset leader.
inline CosetLeaderProfile bfs_coset_profile(const LinearCode& code) {
  const Field& field = code.field();
  const std::uint32_t q = field.order();
  const std::size_t r = code.redundancy();
  if (r == 0) return {{{0, 1}}, 0};
  const Matrix h = code.parity_matrix();
  std::vector<Vector> steps;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    for (std::uint32_t a = 1; a < q; ++a) {
      Vector s(r);
      for (std::size_t i = 0; i < r; ++i) s[i] = field.mul(Element{a}, h(i, c));
      steps.push_back(s);
    }
  }
  const std::uint64_t total = ipow(q, static_cast<unsigned>(r));
  std::vector<int> dist(total, -1);
  std::deque<std::uint64_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    const Vector v = digits(cur, q, r);
    for (const Vector& s : steps) {
      Vector w(r);
      for (std::size_t i = 0; i < r; ++i) w[i] = field.add(v[i], s[i]);
      const std::uint64_t next = undigits(w, q);
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  CosetLeaderProfile out;
  for (int d : dist) {
    if (d < 0) throw std::logic_error("parity-check matrix does not span");
    ++out.counts[static_cast<unsigned>(d)];
    out.covering_radius = std::max(out.covering_radius, static_cast<unsigned>(d));
  }
  return out;
}

// Every message m in GF(q)^k, decoded from its integer index.
inline std::vector<std::uint64_t> enumerate_weights(const LinearCode& code) {
  const Field& field = code.field();
  const Matrix g = code.generator_matrix();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  std::vector<std::uint64_t> out(n + 1, 0);
  const std::uint64_t total = ipow(field.order(), static_cast<unsigned>(k));
  for (std::uint64_t index = 0; index < total; ++index) {
    const Vector m = digits(index, field.order(), k);
    std::size_t weight = 0;
    for (std::size_t c = 0; c < n; ++c) {
      Element sum = Field::zero();
      for (std::size_t i = 0; i < k; ++i) sum = field.add(sum, field.mul(m[i], g(i, c)));
      if (!sum.is_zero()) ++weight;
    }
    ++out[weight];
  }
  return out;
}

// Tr(x) = sum of the Frobenius conjugates, computed by repeated powering.
inline std::uint32_t trace_by_powers(const Field& field, Element x) {
  Element sum = Field::zero();
  Element conj = x;
  for (std::uint32_t i = 0; i < field.degree(); ++i) {
    sum = field.add(sum, conj);
    conj = field.pow(conj, field.characteristic());
  }
  return sum.index();
}

// Direct O(q^2s) evaluation of sum_x h(x) zeta^{Tr(w.x)}.
inline std::vector<CyclotomicInteger> naive_transform(const Field& field, unsigned s,
                                                      const std::vector<CyclotomicInteger>& h) {
  const std::uint32_t q = field.order();
  const std::uint64_t size = ipow(q, s);
  std::vector<CyclotomicInteger> out;
  for (std::uint64_t w = 0; w < size; ++w) {
    const Vector omega = digits(w, q, s);
    CyclotomicInteger acc(field.characteristic());
    for (std::uint64_t x = 0; x < size; ++x) {
      const Vector xv = digits(x, q, s);
      Element dot = Field::zero();
      for (unsigned i = 0; i < s; ++i) dot = field.add(dot, field.mul(omega[i], xv[i]));
      CyclotomicInteger term = h[x];
      acc.add_rotated(term, trace_by_powers(field, dot));
    }
    out.push_back(acc);
  }
  return out;
}

// A random integer function with h(u x) = h(x) for every nonzero scalar u.
inline std::vector<BigInt> random_invariant_function(Rng& rng, const Field& field, unsigned s, int lo = -20,
                                                     int hi = 20) {
  const std::uint32_t q = field.order();
  const std::uint64_t size = ipow(q, s);
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<BigInt> out(size);
  std::vector<bool> done(size, false);
  for (std::uint64_t x = 0; x < size; ++x) {
    if (done[x]) continue;
    const BigInt value = d(rng);
    const Vector xv = digits(x, q, s);
    for (std::uint32_t u = 1; u < q; ++u) {
      Vector scaled(s);
      for (unsigned i = 0; i < s; ++i) scaled[i] = field.mul(Element{u}, xv[i]);
      const std::uint64_t y = undigits(scaled, q);
      out[y] = value;
      done[y] = true;
    }
    out[x] = value;
    done[x] = true;
  }
  return out;
}

}  // namespace gwht::testing
