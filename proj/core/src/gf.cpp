#include "gwht/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gwht/bigint.hpp"
#include "gwht/errors.hpp"

namespace gwht {

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw BudgetError("integer power overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

// Tables with full q x q addition are only kept for small fields.
constexpr std::uint32_t kAddTableLimit = 256;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& modulus, std::uint32_t p) {
  const std::size_t degree = modulus.size() - 1;
  // Every reducible polynomial has a monic factor of degree <= degree/2.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    const std::uint64_t count = checked_pow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      if (poly_mod(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

struct Field::Tables {
  std::uint32_t p = 0;
  std::uint32_t l = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> exp;  // length 2(q-1), exp[i] = g^i
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> trace;
  std::vector<std::uint16_t> add;  // q*q when q <= kAddTableLimit
  std::vector<std::uint16_t> sub;

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b, bool subtract) const {
    if (p == 2) return a ^ b;
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < l; ++i) {
      const std::uint32_t da = a % p;
      const std::uint32_t db = b % p;
      const std::uint32_t d = subtract ? (da + p - db) % p : (da + db) % p;
      result += d * place;
      place *= p;
      a /= p;
      b /= p;
    }
    return result;
  }

  Poly to_poly(std::uint32_t a) const {
    Poly out(l);
    for (std::uint32_t i = 0; i < l; ++i) {
      out[i] = a % p;
      a /= p;
    }
    return out;
  }

  std::uint32_t from_poly(const Poly& a) const {
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < l; ++i) {
      if (i < a.size()) result += a[i] * place;
      place *= p;
    }
    return result;
  }

  // Schoolbook product, used only while building the tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (l == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    const Poly pa = to_poly(a);
    const Poly pb = to_poly(b);
    Poly prod(2 * l - 1, 0);
    for (std::uint32_t i = 0; i < l; ++i) {
      for (std::uint32_t j = 0; j < l; ++j) {
        prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      }
    }
    return from_poly(poly_mod(std::move(prod), modulus, p));
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1u) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1u;
    }
    return result;
  }
};

std::optional<std::vector<std::uint32_t>> Field::conway_polynomial(std::uint32_t q) {
  static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
      {4, {1, 1, 1}},         // X^2 + X + 1
      {8, {1, 1, 0, 1}},      // X^3 + X + 1
      {9, {2, 2, 1}},         // X^2 + 2X + 2
      {16, {1, 1, 0, 0, 1}},  // X^4 + X + 1
      {25, {2, 4, 1}},        // X^2 + 4X + 2
      {27, {1, 2, 0, 1}},     // X^3 + 2X + 1
  };
  if (auto it = table.find(q); it != table.end()) return it->second;
  return std::nullopt;
}

Field Field::create(std::uint32_t p, std::uint32_t degree,
                    std::optional<std::vector<std::uint32_t>> modulus) {
  if (!gwht::is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (degree == 0) throw InputError("field degree must be at least 1");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    q64 *= p;
    if (q64 > kMaxOrder) {
      throw InputError("field order exceeds 2^16");
    }
  }
  const auto q = static_cast<std::uint32_t>(q64);

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->l = degree;
  t->q = q;

  if (degree >= 2) {
    if (!modulus) {
      modulus = conway_polynomial(q);
      if (!modulus) {
        throw InputError("GF(" + std::to_string(q) + ") has no built-in modulus; supply one");
      }
    }
    if (modulus->size() != degree + 1) {
      throw InputError("modulus must have degree " + std::to_string(degree));
    }
    for (std::uint32_t c : *modulus) {
      if (c >= p) throw InputError("modulus coefficient out of range");
    }
    if (modulus->back() != 1) throw InputError("modulus must be monic");
    if (!is_irreducible(*modulus, p)) throw InputError("modulus is reducible");
    t->modulus = *modulus;
  } else if (modulus && !modulus->empty()) {
    throw InputError("prime fields take no modulus");
  }

  // Find a primitive element g, then tabulate powers.
  const auto factors = prime_factors(q - 1);
  std::uint32_t generator = 0;
  for (std::uint32_t g = 1; g < q && generator == 0; ++g) {
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint32_t r) {
      return t->slow_pow(g, (q - 1) / r) != 1;
    });
    if (primitive) generator = g;
  }
  t->exp.resize(2 * std::size_t{q - 1});
  t->log.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    t->exp[i] = x;
    t->exp[i + q - 1] = x;
    t->log[x] = i;
    x = t->slow_mul(x, generator);
  }

  t->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) t->neg[a] = t->add_digits(0, a, true);

  if (q <= kAddTableLimit) {
    t->add.resize(std::size_t{q} * q);
    t->sub.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        t->add[a * q + b] = static_cast<std::uint16_t>(t->add_digits(a, b, false));
        t->sub[a * q + b] = static_cast<std::uint16_t>(t->add_digits(a, b, true));
      }
    }
  }

  t->trace.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t sum = 0;
    std::uint32_t power = a;
    for (std::uint32_t i = 0; i < degree; ++i) {
      sum = t->add_digits(sum, power, false);
      power = t->slow_pow(power, p);
    }
    if (sum >= p) throw std::logic_error("trace left the prime subfield");
    t->trace[a] = sum;
  }

  return Field(std::move(t));
}

Field Field::of_order(std::uint32_t q, std::optional<std::vector<std::uint32_t>> modulus) {
  if (q < 2) throw InputError("field order must be at least 2");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) throw InputError(std::to_string(q) + " is not a prime power");
  std::uint32_t degree = 0;
  for (std::uint32_t r = q; r > 1; r /= factors[0]) ++degree;
  return create(factors[0], degree, std::move(modulus));
}

std::uint32_t Field::characteristic() const noexcept { return tables_->p; }
std::uint32_t Field::degree() const noexcept { return tables_->l; }
std::uint32_t Field::order() const noexcept { return tables_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return tables_->modulus; }

Element Field::element(std::uint32_t index) const {
  if (index >= order()) {
    throw InputError("element " + std::to_string(index) + " out of range for " + name());
  }
  return Element{index};
}

Element Field::add(Element a, Element b) const noexcept {
  const Tables& t = *tables_;
  if (!t.add.empty()) return Element{t.add[a.index() * t.q + b.index()]};
  return Element{t.add_digits(a.index(), b.index(), false)};
}

Element Field::sub(Element a, Element b) const noexcept {
  const Tables& t = *tables_;
  if (!t.sub.empty()) return Element{t.sub[a.index() * t.q + b.index()]};
  return Element{t.add_digits(a.index(), b.index(), true)};
}

Element Field::neg(Element a) const noexcept { return Element{tables_->neg[a.index()]}; }

Element Field::mul(Element a, Element b) const noexcept {
  if (a.is_zero() || b.is_zero()) return zero();
  const Tables& t = *tables_;
  return Element{t.exp[t.log[a.index()] + t.log[b.index()]]};
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  const Tables& t = *tables_;
  return Element{t.exp[(t.q - 1 - t.log[a.index()]) % (t.q - 1)]};
}

Element Field::div(Element a, Element b) const {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return mul(a, inv(b));
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const Tables& t = *tables_;
  return Element{t.exp[(t.log[a.index()] * (e % (t.q - 1))) % (t.q - 1)]};
}

Element Field::apply(ArithOp op, Element a, Element b) const {
  const bool unary = op == ArithOp::neg || op == ArithOp::inv;
  if (!contains(a) || (!unary && !contains(b))) throw InputError("operand not in " + name());
  switch (op) {
    case ArithOp::add: return add(a, b);
    case ArithOp::sub: return sub(a, b);
    case ArithOp::mul: return mul(a, b);
    case ArithOp::div: return div(a, b);
    case ArithOp::neg: return neg(a);
    case ArithOp::inv: return inv(a);
  }
  throw std::logic_error("unknown ArithOp");
}

Element Field::trace(Element a) const noexcept { return Element{tables_->trace[a.index()]}; }

Element Field::dot(std::span<const Element> a, std::span<const Element> b) const noexcept {
  Element sum = zero();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) sum = add(sum, mul(a[i], b[i]));
  return sum;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << order() << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.tables_ == b.tables_) return true;
  return a.characteristic() == b.characteristic() && a.degree() == b.degree() &&
         a.modulus() == b.modulus();
}

FieldValue::FieldValue(Field field, Element value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) throw InputError("element out of range for " + field_.name());
}

namespace {
const Field& common_field(const FieldValue& a, const FieldValue& b) {
  if (!(a.field() == b.field())) {
    throw InputError("operands belong to different fields: " + a.field().name() + " and " +
                     b.field().name());
  }
  return a.field();
}
}  // namespace

FieldValue FieldValue::operator-() const { return {field_, field_.neg(value_)}; }
FieldValue FieldValue::inverse() const { return {field_, field_.inv(value_)}; }

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
  const Field& f = common_field(a, b);
  return {f, f.add(a.value(), b.value())};
}
FieldValue operator-(const FieldValue& a, const FieldValue& b) {
  const Field& f = common_field(a, b);
  return {f, f.sub(a.value(), b.value())};
}
FieldValue operator*(const FieldValue& a, const FieldValue& b) {
  const Field& f = common_field(a, b);
  return {f, f.mul(a.value(), b.value())};
}
FieldValue operator/(const FieldValue& a, const FieldValue& b) {
  const Field& f = common_field(a, b);
  return {f, f.div(a.value(), b.value())};
}

}  // namespace gwht
