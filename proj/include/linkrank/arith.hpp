/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Exact integer and rational primitives used by every formula module.

#ifndef LINKRANK_ARITH_HPP
#define LINKRANK_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linkrank/error.hpp"

namespace linkrank {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

// Möbius function.  Throws invalid_input for n <= 0.
inline int moebius(std::int64_t n) {
  detail::require(n >= 1, "moebius: argument must be positive, got " + std::to_string(n));
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// gcd of all entries; zeros are ignored, the all-zero list gives 0.
inline std::int64_t gcd_multi(std::span<const std::int64_t> xs) {
  std::int64_t g = 0;
  for (std::int64_t x : xs) {
    detail::require(x >= 0, "gcd_multi: entries must be nonnegative");
    g = std::gcd(g, x);
  }
  return g;
}

inline std::int64_t gcd_multi(std::initializer_list<std::int64_t> xs) {
  return gcd_multi(std::span<const std::int64_t>(xs.begin(), xs.size()));
}

// Positive divisors of n in ascending order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  detail::require(n >= 1, "divisors: argument must be positive, got " + std::to_string(n));
  std::vector<std::int64_t> low;
  std::vector<std::int64_t> high;
  for (std::int64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    low.push_back(i);
    if (i != n / i) high.push_back(n / i);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline ExactInt factorial(std::int64_t n) {
  detail::require(n >= 0, "factorial: argument must be nonnegative");
  ExactInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

// (sum xs)! / prod(x_k!), built as a product of binomials so every
// intermediate value is an integer.
inline ExactInt multinomial(std::span<const std::int64_t> xs) {
  ExactInt result = 1;
  std::int64_t running = 0;
  for (std::int64_t x : xs) {
    detail::require(x >= 0, "multinomial: entries must be nonnegative");
    running += x;
    if (x != 0 && x != running) result *= binomial(running, x);
  }
  return result;
}

inline ExactInt multinomial(std::initializer_list<std::int64_t> xs) {
  return multinomial(std::span<const std::int64_t>(xs.begin(), xs.size()));
}

inline bool fits_int64(const ExactInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(const ExactInt& v) { return v.str(); }

inline std::string to_string(const ExactRat& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline bool is_integral(const ExactRat& v) {
  return boost::multiprecision::denominator(v) == 1;
}

}  // namespace linkrank

#endif  // LINKRANK_ARITH_HPP
