#include "gwht/spectral.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gwht/errors.hpp"
#include "gwht/linalg.hpp"

namespace gwht {

std::uint64_t domain_size(const Field& field, unsigned arity) {
  return checked_pow(field.order(), arity);
}

Vector decode_point(const Field& field, unsigned arity, std::uint64_t index) {
  const std::uint32_t q = field.order();
  Vector x(arity);
  for (unsigned i = arity; i-- > 0;) {
    x[i] = Element{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return x;
}

std::uint64_t encode_point(const Field& field, std::span<const Element> x) {
  std::uint64_t index = 0;
  for (Element e : x) index = index * field.order() + e.index();
  return index;
}

std::uint32_t kernel_exponent(const Field& field, std::span<const Element> omega,
                              std::span<const Element> x) {
  if (omega.size() != x.size()) throw InputError("kernel arguments differ in length");
  return field.trace(field.dot(omega, x)).index();
}

CyclotomicInteger vc_kernel(const Field& field, std::span<const Element> omega,
                            std::span<const Element> x) {
  if (!field.is_prime()) {
    throw InputError("Vilenkin-Chrestenson kernel needs a prime field; use trace_kernel for " +
                     field.name());
  }
  return CyclotomicInteger::zeta_power(field.characteristic(), kernel_exponent(field, omega, x));
}

CyclotomicInteger trace_kernel(const Field& field, std::span<const Element> omega,
                               std::span<const Element> x) {
  return CyclotomicInteger::zeta_power(field.characteristic(), kernel_exponent(field, omega, x));
}

std::vector<std::uint32_t> kernel_exponents(const Field& field, unsigned arity) {
  const std::uint64_t size = domain_size(field, arity);
  std::vector<Vector> points;
  points.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) points.push_back(decode_point(field, arity, i));
  std::vector<std::uint32_t> out(size * size);
  for (std::uint64_t w = 0; w < size; ++w) {
    for (std::uint64_t x = 0; x < size; ++x) {
      out[w * size + x] = kernel_exponent(field, points[w], points[x]);
    }
  }
  return out;
}

FullSpectrum::FullSpectrum(Field field, unsigned arity, std::vector<CyclotomicInteger> values)
    : field_(std::move(field)), arity_(arity), values_(std::move(values)) {
  if (values_.size() != domain_size(field_, arity_)) {
    throw InputError("spectrum has " + std::to_string(values_.size()) + " values, expected q^s = " +
                     std::to_string(domain_size(field_, arity_)));
  }
  for (const auto& v : values_) {
    if (v.order() != field_.characteristic()) {
      throw InputError("spectrum values must lie in Z[zeta_p] with p the characteristic");
    }
  }
}

FullSpectrum FullSpectrum::from_integers(Field field, unsigned arity, std::span<const BigInt> values) {
  std::vector<CyclotomicInteger> out;
  out.reserve(values.size());
  for (const BigInt& v : values) out.emplace_back(field.characteristic(), v);
  return FullSpectrum(std::move(field), arity, std::move(out));
}

FullSpectrum transform_full(const FullSpectrum& h, TransformAlgorithm algorithm,
                            std::uint64_t budget) {
  const Field& field = h.field();
  const std::uint32_t p = field.characteristic();
  const std::uint32_t q = field.order();
  const unsigned s = h.arity();
  const std::uint64_t size = h.size();
  if (size * (p == 2 ? 1 : p - 1) > budget) {
    throw BudgetError("full transform over " + field.name() + "^" + std::to_string(s) +
                      " exceeds the coefficient budget");
  }

  if (algorithm == TransformAlgorithm::naive) {
    std::vector<Vector> points;
    points.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) points.push_back(decode_point(field, s, i));
    std::vector<CyclotomicInteger> out(size, CyclotomicInteger(p));
    for (std::uint64_t w = 0; w < size; ++w) {
      for (std::uint64_t x = 0; x < size; ++x) {
        out[w].add_rotated(h[x], kernel_exponent(field, points[w], points[x]));
      }
    }
    return FullSpectrum(field, s, std::move(out));
  }

  // The kernel factors over coordinates (T_{s+1} = T_1 (x) T_s), so apply the
  // one-dimensional q x q kernel along each axis in turn.
  std::vector<std::uint32_t> exponent(std::size_t{q} * q);
  for (std::uint32_t w = 0; w < q; ++w) {
    for (std::uint32_t x = 0; x < q; ++x) {
      exponent[w * q + x] = field.trace(field.mul(Element{w}, Element{x})).index();
    }
  }
  std::vector<CyclotomicInteger> values = h.values();
  std::vector<CyclotomicInteger> in(q, CyclotomicInteger(p));
  std::uint64_t stride = size;
  for (unsigned axis = 0; axis < s; ++axis) {
    stride /= q;
    const std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < size; base += block) {
      for (std::uint64_t offset = 0; offset < stride; ++offset) {
        for (std::uint32_t x = 0; x < q; ++x) {
          in[x] = std::move(values[base + x * stride + offset]);
        }
        for (std::uint32_t w = 0; w < q; ++w) {
          CyclotomicInteger acc(p);
          for (std::uint32_t x = 0; x < q; ++x) acc.add_rotated(in[x], exponent[w * q + x]);
          values[base + w * stride + offset] = std::move(acc);
        }
      }
    }
  }
  return FullSpectrum(field, s, std::move(values));
}

std::vector<BigInt> Composition::reduced() const {
  std::vector<BigInt> out;
  out.reserve(mu.empty() ? 0 : mu.size() - 1);
  for (std::size_t u = 1; u < mu.size(); ++u) out.push_back(mu[0] - mu[u]);
  return out;
}

Composition composition(const Field& field, std::span<const Element> row,
                        std::span<const BigInt> v) {
  if (row.size() != v.size()) {
    throw InputError("composition: row has length " + std::to_string(row.size()) +
                     " but weights have length " + std::to_string(v.size()));
  }
  Composition c;
  c.mu.assign(field.order(), BigInt{0});
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!field.contains(row[j])) throw InputError("composition: element out of range");
    c.mu[row[j].index()] += v[j];
  }
  return c;
}

std::vector<BigInt> reduced_distribution(const ProjectiveTable& table, std::span<const BigInt> v) {
  return table.r_times(v);
}

ReducedSpectrum::ReducedSpectrum(std::shared_ptr<const ProjectiveTable> table, BigInt at_zero,
                                 std::vector<BigInt> at_points)
    : table_(std::move(table)), at_zero_(std::move(at_zero)), at_points_(std::move(at_points)) {
  if (!table_) throw std::invalid_argument("ReducedSpectrum needs a table");
  if (at_points_.size() != table_->size()) {
    throw InputError("reduced spectrum has " + std::to_string(at_points_.size()) +
                     " point values, expected theta = " + std::to_string(table_->size()));
  }
}

ReducedSpectrum ReducedSpectrum::zero(std::shared_ptr<const ProjectiveTable> table) {
  const std::size_t n = table->size();
  return ReducedSpectrum(std::move(table), BigInt{0}, std::vector<BigInt>(n, BigInt{0}));
}

ReducedSpectrum ReducedSpectrum::from_full(std::shared_ptr<const ProjectiveTable> table,
                                           const FullSpectrum& full) {
  if (!(full.field() == table->field()) || full.arity() != table->dimension()) {
    throw InputError("full spectrum does not match the projective table");
  }
  auto integer_at = [&](std::uint64_t index) {
    auto value = full[index].to_integer();
    if (!value) throw InputError("function is not integer valued");
    return *value;
  };
  BigInt at_zero = integer_at(0);
  std::vector<BigInt> points(table->size());
  std::vector<bool> seen(table->size(), false);
  for (std::uint64_t index = 1; index < full.size(); ++index) {
    const Vector x = decode_point(full.field(), full.arity(), index);
    const PointRef ref = table->point_index(x);
    BigInt value = integer_at(index);
    if (!seen[ref.index]) {
      points[ref.index] = std::move(value);
      seen[ref.index] = true;
    } else if (points[ref.index] != value) {
      throw InputError("function is not constant on proportionality classes");
    }
  }
  return ReducedSpectrum(std::move(table), std::move(at_zero), std::move(points));
}

FullSpectrum ReducedSpectrum::to_full(std::uint64_t budget) const {
  const Field& field = table_->field();
  const unsigned s = table_->dimension();
  const std::uint64_t size = domain_size(field, s);
  if (size > budget) throw BudgetError("expanding a reduced spectrum exceeds the budget");
  std::vector<BigInt> values(size);
  values[0] = at_zero_;
  for (std::uint64_t index = 1; index < size; ++index) {
    values[index] = at_points_[table_->point_index(decode_point(field, s, index)).index];
  }
  return FullSpectrum::from_integers(field, s, values);
}

const BigInt& ReducedSpectrum::value(std::span<const Element> x) const {
  if (is_zero(x)) return at_zero_;
  return at_points_[table_->point_index(x).index];
}

ReducedSpectrum& ReducedSpectrum::operator+=(const ReducedSpectrum& other) {
  if (!(*table_ == *other.table_)) throw InputError("adding spectra over different tables");
  at_zero_ += other.at_zero_;
  for (std::size_t i = 0; i < at_points_.size(); ++i) at_points_[i] += other.at_points_[i];
  return *this;
}

ReducedSpectrum reduced_transform(const ReducedSpectrum& f) {
  const ProjectiveTable& table = f.table();
  const BigInt q = table.field().order();
  BigInt total = 0;
  for (const BigInt& x : f.at_points()) total += x;
  std::vector<BigInt> points = table.r_times(f.at_points());
  for (BigInt& x : points) x += f.at_zero();
  return ReducedSpectrum(f.table_ptr(), f.at_zero() + (q - 1) * total, std::move(points));
}

ReducedSpectrum reduced_transform(const ProjectiveTable& table, const ReducedSpectrum& f) {
  if (!(table == f.table())) {
    throw InputError("reduced spectrum was built over a different table");
  }
  return reduced_transform(f);
}

ReducedSpectrum pointwise_power(const ReducedSpectrum& f, unsigned j) {
  if (j == 0) throw InputError("pointwise_power needs j >= 1");
  std::vector<BigInt> points(f.at_points().size());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = pow(f.at_points()[i], j);
  return ReducedSpectrum(f.table_ptr(), pow(f.at_zero(), j), std::move(points));
}

ReducedSpectrum pointwise_product(const ReducedSpectrum& a, const ReducedSpectrum& b) {
  if (!(a.table() == b.table())) throw InputError("multiplying spectra over different tables");
  std::vector<BigInt> points(a.at_points().size());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = a.at_points()[i] * b.at_points()[i];
  return ReducedSpectrum(a.table_ptr(), a.at_zero() * b.at_zero(), std::move(points));
}

std::string format_point(std::span<const Element> x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i].index();
  os << ')';
  return os.str();
}

void write_spectrum(std::ostream& os, const ReducedSpectrum& f) {
  const ProjectiveTable& table = f.table();
  const Vector origin(table.dimension(), Field::zero());
  os << format_point(origin) << ' ' << f.at_zero() << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    os << format_point(table.point(i)) << ' ' << f.at_points()[i] << '\n';
  }
}

void write_spectrum(std::ostream& os, const FullSpectrum& f) {
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    os << format_point(decode_point(f.field(), f.arity(), i)) << ' ' << f[i].to_string() << '\n';
  }
}

}  // namespace gwht
