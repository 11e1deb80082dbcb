#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>

#include "tspread/error.hpp"

namespace tspread {

/// Exact non-negative count. 128 bits with checked arithmetic; every
/// operation that would wrap throws OverflowError instead.
using Count = unsigned __int128;

inline Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("count addition overflows 128 bits");
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("count multiplication overflows 128 bits");
  return out;
}

inline Count checked_sub(Count a, Count b) {
  if (b > a) throw OverflowError("count subtraction underflows");
  return a - b;
}

namespace detail {
constexpr std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    auto r = a % b;
    a = b;
    b = r;
  }
  return a;
}
}  // namespace detail

/// binom(a, b) with the conventions binom(a, 0) = 1 for every a >= 0
/// (including binom(0, 0) = 1) and binom(a, b) = 0 when b < 0 or a < b.
inline Count binom(long long a, long long b) {
  if (b < 0 || a < 0 || a < b) return 0;
  b = std::min(b, a - b);
  Count result = 1;
  for (long long i = 1; i <= b; ++i) {
    // result * (a - b + i) / i is exact at every step; reduce first so the
    // intermediate product stays small.
    std::uint64_t num = static_cast<std::uint64_t>(a - b + i);
    std::uint64_t den = static_cast<std::uint64_t>(i);
    std::uint64_t g = detail::gcd_u64(num, den);
    num /= g;
    den /= g;
    // den divides result here because result * num / den is an integer and
    // gcd(num, den) = 1.
    result = checked_mul(result / den, num);
  }
  return result;
}

inline std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

inline bool fits_u64(Count value) { return value <= std::numeric_limits<std::uint64_t>::max(); }

/// Upper bound on the number of monomials any single enumeration may
/// materialize. Read once from TSPREAD_MAX_CELLS, default 10^7.
inline Count cell_limit() {
  static const Count limit = [] {
    const char* env = std::getenv("TSPREAD_MAX_CELLS");
    if (env == nullptr || *env == '\0') return Count{10'000'000};
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return Count{10'000'000};
    return Count{v};
  }();
  return limit;
}

inline void require_cells(Count cells, const char* what) {
  if (cells > cell_limit()) {
    throw ResourceLimitError(std::string(what) + " would materialize " + to_string(cells) +
                             " monomials, above TSPREAD_MAX_CELLS=" + to_string(cell_limit()));
  }
}

}  // namespace tspread
