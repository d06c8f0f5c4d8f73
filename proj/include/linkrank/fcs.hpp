/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Finiteness-checking sets for two-component links.  A point (x, y) lies in
// FCS(i, j) exactly when the two-generator multiplicity m(x, y) is positive
// for generator degrees of parities (i, j).

#ifndef LINKRANK_FCS_HPP
#define LINKRANK_FCS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linkrank/error.hpp"

namespace linkrank {

enum class Parity { even, odd };

inline Parity parity_of(std::int64_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct ParityPair {
  Parity i;
  Parity j;
  bool operator==(const ParityPair&) const = default;
};

namespace detail {

inline bool divides(std::int64_t d, std::int64_t n) { return n % d == 0; }

inline bool fcs_even_even(std::int64_t x, std::int64_t y) {
  return (x == 1 && y == 1) ||
         (x == 2 && divides(2, y)) ||
         (x == 3 && y == 3) ||
         (x == 3 && y >= 5) ||
         (x >= 4 && y >= 4) ||
         (divides(2, x) && y == 2) ||
         (x >= 5 && y == 3);
}

inline bool fcs_odd_even(std::int64_t x, std::int64_t y) {
  return (x == 1 && y == 1) ||
         (x == 2 && divides(2, y + 1)) ||
         (x == 3 && y >= 2) ||
         (x >= 4 && y >= 4) ||
         (divides(4, x) && y == 2) ||
         (divides(4, x + 1) && y == 2) ||
         (x >= 5 && y == 3);
}

inline bool fcs_odd_odd(std::int64_t x, std::int64_t y) {
  return (x == 1 && y == 1) ||
         (x == 2 && divides(4, y + 2)) ||
         (x == 2 && divides(4, y + 3)) ||
         (x >= 3 && y >= 3) ||
         (divides(4, x + 2) && y == 2) ||
         (divides(4, x + 3) && y == 2);
}

}  // namespace detail

inline bool fcs_contains(ParityPair pp, std::int64_t x, std::int64_t y) {
  detail::require(x >= 1 && y >= 1, "fcs_contains: coordinates must be positive");
  if (pp.i == Parity::even && pp.j == Parity::even) return detail::fcs_even_even(x, y);
  if (pp.i == Parity::odd && pp.j == Parity::even) return detail::fcs_odd_even(x, y);
  if (pp.i == Parity::odd && pp.j == Parity::odd) return detail::fcs_odd_odd(x, y);
  // (even, odd) is the mirror image of (odd, even).
  return detail::fcs_odd_even(y, x);
}

// Members of FCS inside [1, x_max] x [1, y_max], ordered by x then y.
inline std::vector<std::pair<std::int64_t, std::int64_t>> fcs_enumerate(ParityPair pp, std::int64_t x_max,
                                                                        std::int64_t y_max) {
  detail::require(x_max >= 1 && y_max >= 1, "fcs_enumerate: bounds must be positive");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t x = 1; x <= x_max; ++x) {
    for (std::int64_t y = 1; y <= y_max; ++y) {
      if (fcs_contains(pp, x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace linkrank

#endif  // LINKRANK_FCS_HPP
