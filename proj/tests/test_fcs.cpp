/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "linkrank/fcs.hpp"
#include "linkrank/liedim.hpp"

using linkrank::Parity;
using linkrank::ParityPair;

namespace {

const ParityPair kEE{Parity::even, Parity::even};
const ParityPair kOE{Parity::odd, Parity::even};
const ParityPair kEO{Parity::even, Parity::odd};
const ParityPair kOO{Parity::odd, Parity::odd};

using Points = std::vector<std::pair<std::int64_t, std::int64_t>>;

}  // namespace

TEST(Fcs, BulletExamples) {
  EXPECT_TRUE(linkrank::fcs_contains(kEE, 1, 1));
  EXPECT_FALSE(linkrank::fcs_contains(kEE, 2, 3));
  EXPECT_TRUE(linkrank::fcs_contains(kOE, 2, 3));
  EXPECT_TRUE(linkrank::fcs_contains(kOO, 2, 6));
  EXPECT_TRUE(linkrank::fcs_contains(kOE, 8, 2));
  EXPECT_FALSE(linkrank::fcs_contains(kOE, 6, 2));
  EXPECT_TRUE(linkrank::fcs_contains(kOE, 7, 2));
  EXPECT_FALSE(linkrank::fcs_contains(kEE, 4, 3));
  EXPECT_TRUE(linkrank::fcs_contains(kEE, 5, 3));
}

TEST(Fcs, RejectsNonPositive) {
  EXPECT_THROW(linkrank::fcs_contains(kEE, 0, 1), linkrank::invalid_input);
  EXPECT_THROW(linkrank::fcs_contains(kOO, 1, -2), linkrank::invalid_input);
  EXPECT_THROW(linkrank::fcs_enumerate(kOO, 0, 3), linkrank::invalid_input);
}

TEST(Fcs, EnumerateExamples) {
  EXPECT_EQ(linkrank::fcs_enumerate(kEE, 3, 3), (Points{{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_EQ(linkrank::fcs_enumerate(kOO, 2, 2), (Points{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  for (const ParityPair& pp : {kEE, kOE, kEO, kOO}) EXPECT_EQ(linkrank::fcs_enumerate(pp, 1, 1), (Points{{1, 1}}));
}

TEST(Fcs, ReflectionSymmetry) {
  for (std::int64_t x = 1; x <= 30; ++x) {
    for (std::int64_t y = 1; y <= 30; ++y) {
      EXPECT_EQ(linkrank::fcs_contains(kEO, x, y), linkrank::fcs_contains(kOE, y, x));
      EXPECT_EQ(linkrank::fcs_contains(kEE, x, y), linkrank::fcs_contains(kEE, y, x));
      EXPECT_EQ(linkrank::fcs_contains(kOO, x, y), linkrank::fcs_contains(kOO, y, x));
    }
  }
}

TEST(Fcs, EquivalentToPositiveMultiplicity) {
  for (const ParityPair& pp : {kEE, kOE, kEO, kOO}) {
    for (std::int64_t shift = 0; shift <= 2; shift += 2) {
      const linkrank::GeneratorSystem gs{(pp.i == Parity::even ? 2 : 1) + shift, (pp.j == Parity::even ? 2 : 1) + shift};
      for (std::int64_t x = 1; x <= 20; ++x) {
        for (std::int64_t y = 1; y <= 20; ++y) {
          EXPECT_EQ(linkrank::fcs_contains(pp, x, y), linkrank::multiplicity(gs, linkrank::MultiDegree{x, y}) > 0)
              << linkrank::to_string(pp.i) << "," << linkrank::to_string(pp.j) << " at (" << x << "," << y << ")";
        }
      }
    }
  }
}
