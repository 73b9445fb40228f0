#include "code_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "gwht/errors.hpp"
#include "gwht/projective.hpp"
#include "gwht/spectral.hpp"

namespace gwht::cli {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      if (end > pos) parsed.tokens.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::uint64_t parse_unsigned(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

BigInt parse_integer(std::string_view token, std::size_t line) {
  std::string_view digits = token;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return BigInt(std::string(token));
}

bool is_keyword(std::string_view token) {
  return !token.empty() && std::isalpha(static_cast<unsigned char>(token.front()));
}

// Header keys with single values, plus `modulus`; everything else is data.
struct Header {
  std::map<std::string, std::pair<std::size_t, std::string>> keys;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::vector<Line> data;
};

Header split(std::string_view text, std::initializer_list<std::string_view> allowed) {
  Header h;
  for (Line& line : tokenize(text)) {
    const std::string_view head = line.tokens.front();
    if (!is_keyword(head)) {
      h.data.push_back(std::move(line));
      continue;
    }
    if (std::find(allowed.begin(), allowed.end(), head) == allowed.end()) {
      fail(line.number, "unknown key '" + std::string(head) + "'");
    }
    const std::string key(head);
    if (key == "modulus") {
      if (h.modulus) fail(line.number, "duplicate key 'modulus'");
      if (line.tokens.size() < 3) fail(line.number, "modulus needs at least two coefficients");
      std::vector<std::uint32_t> coeffs;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const std::uint64_t c = parse_unsigned(line.tokens[i], line.number);
        if (c > Field::kMaxOrder) fail(line.number, "modulus coefficient out of range");
        coeffs.push_back(static_cast<std::uint32_t>(c));
      }
      h.modulus = std::move(coeffs);
      continue;
    }
    if (h.keys.count(key)) fail(line.number, "duplicate key '" + key + "'");
    if (line.tokens.size() != 2) fail(line.number, "key '" + key + "' takes exactly one value");
    h.keys[key] = {line.number, std::string(line.tokens[1])};
  }
  return h;
}

std::uint64_t required_unsigned(const Header& h, const std::string& key) {
  const auto it = h.keys.find(key);
  if (it == h.keys.end()) throw InputError("missing key '" + key + "'");
  return parse_unsigned(it->second.second, it->second.first);
}

Field field_from(const Header& h) {
  const std::uint64_t q = required_unsigned(h, "q");
  if (q < 2 || q > Field::kMaxOrder) throw InputError("q = " + std::to_string(q) + " is out of range");
  try {
    return Field::of_order(static_cast<std::uint32_t>(q), h.modulus);
  } catch (const InputError& e) {
    throw InputError(std::string("invalid field: ") + e.what());
  }
}

}  // namespace

LinearCode parse_code_file(std::string_view text) {
  const Header h = split(text, {"q", "n", "k", "matrix", "modulus"});
  const Field field = field_from(h);
  const std::uint64_t n = required_unsigned(h, "n");
  const std::uint64_t k = required_unsigned(h, "k");
  if (n == 0) throw InputError("n must be at least 1");
  if (k > n) throw InputError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  const auto kind_it = h.keys.find("matrix");
  if (kind_it == h.keys.end()) throw InputError("missing key 'matrix'");
  const std::string& kind = kind_it->second.second;
  if (kind != "generator" && kind != "parity") {
    fail(kind_it->second.first, "matrix must be 'generator' or 'parity', got '" + kind + "'");
  }
  const bool parity = kind == "parity";
  const std::uint64_t rows = parity ? n - k : k;

  if (h.data.size() != rows) {
    throw InputError(kind + " matrix has " + std::to_string(h.data.size()) + " rows, expected " +
                     std::to_string(rows));
  }
  Matrix m(rows, n);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = h.data[r];
    if (line.tokens.size() != n) {
      fail(line.number, "row has " + std::to_string(line.tokens.size()) + " entries, expected n = " +
                            std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint64_t value = parse_unsigned(line.tokens[c], line.number);
      if (value >= field.order()) {
        fail(line.number, "element out of range: " + std::to_string(value) + " >= q = " +
                              std::to_string(field.order()));
      }
      m(r, c) = Element{static_cast<std::uint32_t>(value)};
    }
  }
  return parity ? LinearCode::from_parity(field, std::move(m))
                : LinearCode::from_generator(field, std::move(m));
}

std::string format_code_file(const LinearCode& code) {
  return format_code_file(code, code.generator() ? MatrixKind::generator : MatrixKind::parity);
}

std::string format_code_file(const LinearCode& code, MatrixKind kind) {
  const Field& field = code.field();
  std::ostringstream os;
  os << "q " << field.order() << '\n';
  os << "n " << code.length() << '\n';
  os << "k " << code.dimension() << '\n';
  if (!field.is_prime()) {
    os << "modulus";
    for (std::uint32_t c : field.modulus()) os << ' ' << c;
    os << '\n';
  }
  const bool parity = kind == MatrixKind::parity;
  os << "matrix " << (parity ? "parity" : "generator") << '\n';
  const Matrix m = parity ? code.parity_matrix() : code.generator_matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).index();
    os << '\n';
  }
  return os.str();
}

FunctionFile parse_function_file(std::string_view text) {
  const Header h = split(text, {"q", "s", "domain", "modulus"});
  FunctionFile out{field_from(h), 0, false, {}};
  const std::uint64_t s = required_unsigned(h, "s");
  if (s == 0 || s > 64) throw InputError("s = " + std::to_string(s) + " is out of range");
  out.arity = static_cast<unsigned>(s);
  if (const auto it = h.keys.find("domain"); it != h.keys.end()) {
    if (it->second.second == "reduced") {
      out.reduced = true;
    } else if (it->second.second != "full") {
      fail(it->second.first, "domain must be 'full' or 'reduced'");
    }
  }
  for (const Line& line : h.data) {
    for (std::string_view token : line.tokens) out.values.push_back(parse_integer(token, line.number));
  }
  const std::uint64_t expected = out.reduced ? theta(out.field.order(), out.arity) + 1
                                             : domain_size(out.field, out.arity);
  if (out.values.size() != expected) {
    throw InputError("function has " + std::to_string(out.values.size()) + " values, expected " +
                     std::to_string(expected));
  }
  return out;
}

}  // namespace gwht::cli
