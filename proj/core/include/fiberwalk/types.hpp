#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fiberwalk {

using BigInt = mpz_class;

/// Exact integer vector (moves, exponent vectors, kernel coordinates).
using Vec = std::vector<BigInt>;

/// Machine-width lattice point. Fiber elements and sampler states live here.
using Point = std::vector<std::int64_t>;

std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal integer. Throws ParseError.
BigInt parse_bigint(std::string_view text);

/// Throws RangeError if `value` does not fit in int64.
std::int64_t narrow(const BigInt& value);
Point narrow(const Vec& v);
Vec widen(const Point& p);

/// Decimal scientific rendering rounded to `significant` digits, e.g. "3.63e134".
/// Values below 10^significant are printed exactly.
std::string scientific(const BigInt& value, int significant = 3);

/// Largest absolute entry; 0 for an empty vector.
BigInt max_abs(const Vec& v);

/// Hash for Point keys in unordered containers.
struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : p) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

std::string format_vector(const Vec& v);
std::string format_vector(const Point& p);

}  // namespace fiberwalk
