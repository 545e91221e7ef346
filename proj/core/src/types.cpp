#include "fiberwalk/types.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "fiberwalk/errors.hpp"

namespace fiberwalk {

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'", 0);
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'", 0);
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

std::int64_t narrow(const BigInt& value) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (value < lo || value > hi) throw RangeError("integer " + to_string(value) + " exceeds 64 bits");
  // mpz_get_si is only guaranteed for long; long is 64-bit on supported targets.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return value.get_si();
}

Point narrow(const Vec& v) {
  Point out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(narrow(x));
  return out;
}

Vec widen(const Point& p) {
  Vec out;
  out.reserve(p.size());
  for (auto x : p) out.emplace_back(static_cast<long>(x));
  return out;
}

std::string scientific(const BigInt& value, int significant) {
  if (significant < 1) significant = 1;
  BigInt mag = abs(value);
  std::string digits = mag.get_str(10);
  const std::string sign = value < 0 ? "-" : "";
  if (digits.size() <= static_cast<std::size_t>(significant)) return sign + digits;

  // Round half up on the first dropped digit.
  auto exponent = static_cast<long>(digits.size()) - 1;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits.size() - static_cast<std::size_t>(significant));
  BigInt head = (mag + scale / 2) / scale;
  std::string h = head.get_str(10);
  if (h.size() > static_cast<std::size_t>(significant)) {
    ++exponent;
    h.pop_back();
  }
  std::string mantissa = h.substr(0, 1);
  if (h.size() > 1) mantissa += "." + h.substr(1);
  return sign + mantissa + "e" + std::to_string(exponent);
}

BigInt max_abs(const Vec& v) {
  BigInt best = 0;
  for (const auto& x : v) {
    if (abs(x) > best) best = abs(x);
  }
  return best;
}

std::string format_vector(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string format_vector(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

}  // namespace fiberwalk
