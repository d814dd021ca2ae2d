#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gct {

using VertexSet = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input text that does not conform to the edge-list format
struct FormatError : Error {
  using Error::Error;
};

// instance larger than the configured threshold of an exact computation
struct SizeError : Error {
  using Error::Error;
};

// an algorithm hypothesis does not hold (girth, feedback set, witness shape, ...)
struct HypothesisError : Error {
  using Error::Error;
};

// an exhaustive search ran out of its node budget
struct BudgetError : Error {
  using Error::Error;
};

// Saturating arithmetic for guarantee bounds: some bounds, e.g. (4k^2)^(k^2),
// overflow 64 bits long before any recomputed quantity could reach them, so a
// saturated value compares correctly against anything we actually measure.
constexpr long long sat_max = std::numeric_limits<long long>::max();

inline long long sat_add(long long a, long long b) {
  if (a > sat_max - b) return sat_max;
  return a + b;
}

inline long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > sat_max / b) return sat_max;
  return a * b;
}

inline long long sat_pow(long long base, long long exp) {
  if (exp == 0) return 1;
  if (base <= 1) return base;  // saturated exponents would otherwise spin
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == sat_max) return sat_max;
  }
  return r;
}

inline long long sat_binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = sat_mul(r, n - k + i);
    if (r == sat_max) return sat_max;
    r /= i;
  }
  return r;
}

inline std::uint64_t fnv1a_digest(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gct
