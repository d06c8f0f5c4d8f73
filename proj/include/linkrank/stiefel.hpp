/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Ranks of the rational homotopy groups of SO_q and of the Stiefel
// manifolds V_{q,l}.

#ifndef LINKRANK_STIEFEL_HPP
#define LINKRANK_STIEFEL_HPP

#include <cstdint>
#include <string>

#include "linkrank/error.hpp"

namespace linkrank {

// rank of pi_p(SO_q) (x) Q.
inline int so_rank(std::int64_t p, std::int64_t q) {
  detail::require(p >= 1, "so_rank: p must be positive");
  detail::require(q >= 1, "so_rank: q must be positive");
  if (q < 2) return 0;
  const bool pontryagin = (p + 1) % 4 == 0;
  if (pontryagin && p == q - 1) return 2;
  if (pontryagin && p != q - 1 && 2 * (q - 1) > p) return 1;
  if (p == q - 1 && (p - 1) % 4 == 0) return 1;
  return 0;
}

// pi_p(V_{q,l}); V_{q,0} is a point.
struct StiefelQuery {
  std::int64_t p;
  std::int64_t q;
  std::int64_t l;
};

inline int stiefel_rank(const StiefelQuery& sq) {
  const auto [p, q, l] = sq;
  detail::require(p >= 1, "stiefel_rank: p must be positive");
  detail::require(q >= 1, "stiefel_rank: q must be positive");
  detail::require(l >= 0, "stiefel_rank: l must be nonnegative");
  detail::require(l <= q, "stiefel_rank: frame length l = " + std::to_string(l) +
                              " exceeds q = " + std::to_string(q));
  if (l == 0) return 0;

  const bool four_p_plus = (p + 1) % 4 == 0;
  const bool four_p_minus = (p - 1) % 4 == 0;
  if (four_p_plus && p + 1 == q && q <= 2 * l) return 2;
  // p/2 + 1 < q < l + p/2 + 1, doubled.
  if (four_p_plus && p + 1 != q && p + 2 < 2 * q && 2 * q < 2 * l + p + 2) return 1;
  if (four_p_plus && p + 1 == q && q > 2 * l) return 1;
  if (four_p_minus && p - 1 == q - 2) return 1;
  if (p % 2 == 0 && p == q - l) return 1;
  return 0;
}

inline int stiefel_rank(std::int64_t p, std::int64_t q, std::int64_t l) {
  return stiefel_rank(StiefelQuery{p, q, l});
}

}  // namespace linkrank

#endif  // LINKRANK_STIEFEL_HPP
