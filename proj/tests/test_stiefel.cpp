/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <cstdint>

#include "linkrank/stiefel.hpp"

namespace {

// Rationally SO_{2n+1} ~ S^3 x S^7 x ... x S^{4n-1} and
// SO_{2n} ~ S^3 x ... x S^{4n-5} x S^{2n-1}.
int so_rank_from_spheres(std::int64_t p, std::int64_t q) {
  int rank = 0;
  const std::int64_t n = q / 2;
  const std::int64_t top = q % 2 == 1 ? 4 * n - 1 : 4 * n - 5;
  for (std::int64_t s = 3; s <= top; s += 4) rank += p == s;
  if (q % 2 == 0 && q >= 2) rank += p == q - 1;
  return rank;
}

int sphere_rank(std::int64_t p, std::int64_t n) {
  if (n == 0) return 0;
  return static_cast<int>(p == n) + static_cast<int>(n % 2 == 0 && p == 2 * n - 1);
}

}  // namespace

TEST(SoRank, Examples) {
  EXPECT_EQ(linkrank::so_rank(3, 4), 2);
  EXPECT_EQ(linkrank::so_rank(7, 6), 1);
  EXPECT_EQ(linkrank::so_rank(5, 6), 1);
  EXPECT_EQ(linkrank::so_rank(1, 2), 1);
  EXPECT_EQ(linkrank::so_rank(3, 3), 1);
  EXPECT_EQ(linkrank::so_rank(3, 1), 0);
  EXPECT_THROW(linkrank::so_rank(0, 3), linkrank::invalid_input);
  EXPECT_THROW(linkrank::so_rank(3, 0), linkrank::invalid_input);
}

TEST(SoRank, MatchesSphereProduct) {
  for (std::int64_t q = 1; q <= 40; ++q) {
    for (std::int64_t p = 1; p <= 90; ++p) {
      EXPECT_EQ(linkrank::so_rank(p, q), so_rank_from_spheres(p, q)) << "p=" << p << " q=" << q;
    }
  }
}

TEST(StiefelRank, Examples) {
  EXPECT_EQ(linkrank::stiefel_rank(3, 4, 2), 2);
  EXPECT_EQ(linkrank::stiefel_rank(3, 4, 1), 1);
  EXPECT_EQ(linkrank::stiefel_rank(2, 3, 1), 1);
  EXPECT_EQ(linkrank::stiefel_rank(4, 3, 1), 0);
  EXPECT_EQ(linkrank::stiefel_rank(7, 5, 0), 0);
  EXPECT_EQ(linkrank::stiefel_rank(linkrank::StiefelQuery{3, 3, 3}), 1);
  EXPECT_THROW(linkrank::stiefel_rank(3, 4, 5), linkrank::invalid_input);
  EXPECT_THROW(linkrank::stiefel_rank(3, 4, -1), linkrank::invalid_input);
  EXPECT_THROW(linkrank::stiefel_rank(0, 4, 1), linkrank::invalid_input);
}

TEST(StiefelRank, SingleFrameIsSphere) {
  for (std::int64_t q = 1; q <= 40; ++q) {
    for (std::int64_t p = 1; p <= 40; ++p) {
      EXPECT_EQ(linkrank::stiefel_rank(p, q, 1), sphere_rank(p, q - 1)) << "p=" << p << " q=" << q;
    }
  }
}

TEST(StiefelRank, FullFramesAreOrthogonalGroup) {
  for (std::int64_t q = 2; q <= 30; ++q) {
    for (std::int64_t p = 1; p <= 60; ++p) {
      EXPECT_EQ(linkrank::stiefel_rank(p, q, q), linkrank::so_rank(p, q)) << "p=" << p << " q=" << q;
      EXPECT_EQ(linkrank::stiefel_rank(p, q, q - 1), linkrank::so_rank(p, q)) << "p=" << p << " q=" << q;
    }
  }
}

TEST(StiefelRank, FibrationBound) {
  // SO_{q-l} -> SO_q -> V_{q,l}
  for (std::int64_t q = 1; q <= 24; ++q) {
    for (std::int64_t l = 1; l <= q; ++l) {
      for (std::int64_t p = 1; p <= 50; ++p) {
        const int v = linkrank::stiefel_rank(p, q, l);
        const int fibre = p >= 2 && q - l >= 1 ? linkrank::so_rank(p - 1, q - l) : 0;
        EXPECT_GE(v, 0);
        EXPECT_LE(v, 2);
        EXPECT_LE(v, linkrank::so_rank(p, q) + fibre) << "p=" << p << " q=" << q << " l=" << l;
      }
    }
  }
}

TEST(StiefelRank, HomotopyEulerCharacteristic) {
  // Alternating rank sums are additive along SO_{q-l} -> SO_q -> V_{q,l}.
  for (std::int64_t q = 1; q <= 24; ++q) {
    for (std::int64_t l = 1; l <= q; ++l) {
      int chi = 0;
      for (std::int64_t p = 1; p <= 4 * q; ++p) chi += (p % 2 == 0 ? 1 : -1) * linkrank::stiefel_rank(p, q, l);
      EXPECT_EQ(chi, -(q / 2) + (q - l) / 2) << "q=" << q << " l=" << l;
    }
  }
}
