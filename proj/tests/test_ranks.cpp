/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "linkrank/ranks.hpp"

using linkrank::ExactInt;
using linkrank::LinkProblem;

TEST(LinkProblem, Validation) {
  EXPECT_THROW(LinkProblem(6, {}), linkrank::invalid_input);
  EXPECT_THROW(LinkProblem(6, {0}), linkrank::invalid_input);
  EXPECT_THROW(LinkProblem(6, {4}), linkrank::invalid_input);
  EXPECT_THROW(LinkProblem(6, {3, 4}), linkrank::invalid_input);
  const LinkProblem lp(10, {5, 7});
  EXPECT_EQ(lp.weights(), (std::vector<std::int64_t>{3, 1}));
  EXPECT_EQ(lp.target_degree(), 7);
  const std::vector<std::size_t> idx = {1};
  EXPECT_EQ(lp.sublink(idx).dim(0), 7);
}

TEST(KnotRank, Examples) {
  EXPECT_EQ(linkrank::knot_rank(10, 7), 1);
  EXPECT_EQ(linkrank::knot_rank(13, 7), 0);
  EXPECT_EQ(linkrank::knot_rank(12, 7), 1);  // 12 < 12.5
  EXPECT_EQ(linkrank::knot_rank(9, 5), 0);
  EXPECT_EQ(linkrank::knot_rank(6, 3), 1);
  EXPECT_EQ(linkrank::knot_rank(7, 3), 0);   // 7 = 3p/2 + 2.5 > 6.5
  EXPECT_THROW(linkrank::knot_rank(5, 3), linkrank::invalid_input);
  EXPECT_THROW(linkrank::knot_rank(5, 0), linkrank::invalid_input);
}

TEST(KnotRank, ZeroOrOne) {
  for (std::int64_t m = 4; m <= 60; ++m) {
    for (std::int64_t p = 1; p < m - 2; ++p) {
      const int k = linkrank::knot_rank(m, p);
      EXPECT_TRUE(k == 0 || k == 1);
    }
  }
}

TEST(BrunnianRank, Examples) {
  EXPECT_EQ(linkrank::brunnian_rank(LinkProblem(5, {2, 2})).rank, 1);
  EXPECT_EQ(linkrank::brunnian_rank(LinkProblem(8, {5, 5})).rank, 0);
  EXPECT_EQ(linkrank::brunnian_rank(LinkProblem(6, {3, 3, 3})).rank, 1);
  EXPECT_EQ(linkrank::brunnian_rank(LinkProblem(10, {5, 7})).rank, 1);
  EXPECT_EQ(linkrank::brunnian_rank(LinkProblem(6, {3, 3})).rank, 2);
  EXPECT_THROW(linkrank::brunnian_rank(LinkProblem(10, {7})), linkrank::invalid_input);
}

TEST(BrunnianRank, ContributionsArePositiveSolutions) {
  const LinkProblem lp(10, {5, 7});
  const auto br = linkrank::brunnian_rank(lp);
  ASSERT_EQ(br.contributions.size(), 2u);
  EXPECT_EQ(br.contributions[0].multidegree, (linkrank::MultiDegree{1, 4}));
  EXPECT_EQ(br.contributions[1].multidegree, (linkrank::MultiDegree{2, 1}));
  ExactInt sum = 0;
  for (const auto& c : br.contributions) sum += c.multiplicity;
  EXPECT_EQ(sum, br.rank);
}

TEST(LinkRank, Examples) {
  const auto r1 = linkrank::link_rank(LinkProblem(6, {3, 3}));
  EXPECT_EQ(r1.total_rank, 4);
  EXPECT_EQ(*r1.brunnian_rank, 2);
  EXPECT_EQ(r1.knot_ranks, (std::vector<int>{1, 1}));
  EXPECT_TRUE(r1.infinite);

  const auto r2 = linkrank::link_rank(LinkProblem(8, {5, 5}));
  EXPECT_EQ(r2.total_rank, 0);
  EXPECT_FALSE(r2.infinite);

  EXPECT_EQ(*linkrank::link_rank(LinkProblem(11, {5, 5})).brunnian_rank, 1);

  const auto knot = linkrank::link_rank(LinkProblem(10, {7}));
  EXPECT_EQ(knot.total_rank, 1);
  EXPECT_FALSE(knot.brunnian_rank.has_value());
  EXPECT_TRUE(knot.contributions.empty());
}

TEST(LinkRank, DecompositionForThreeComponents) {
  const auto rep = linkrank::link_rank(LinkProblem(6, {3, 3, 3}));
  ASSERT_TRUE(rep.subset_decomposition.has_value());
  const auto& parts = *rep.subset_decomposition;
  EXPECT_EQ(parts.size(), 7u);
  EXPECT_EQ(parts.at({0}), 1);
  EXPECT_EQ(parts.at({0, 1}), 2);
  EXPECT_EQ(parts.at({0, 1, 2}), 1);
  EXPECT_EQ(rep.total_rank, 3 * 1 + 3 * 2 + 1);
}

TEST(LinkRank, TwoComponentsSplitIntoBrunnianAndKnots) {
  for (std::int64_t m = 4; m <= 24; ++m) {
    for (std::int64_t p1 = 1; p1 < m - 2; ++p1) {
      for (std::int64_t p2 = p1; p2 < m - 2; ++p2) {
        const LinkProblem lp(m, {p1, p2});
        const auto rep = linkrank::link_rank(lp);
        EXPECT_EQ(rep.total_rank, linkrank::brunnian_rank(lp).rank + linkrank::knot_rank(m, p1) +
                                      linkrank::knot_rank(m, p2))
            << "m = " << m << ", p = " << p1 << "," << p2;
      }
    }
  }
}

TEST(LinkRank, SubsetDecompositionFourComponents) {
  // link_rank asserts the decomposition internally; also check it by hand.
  const std::vector<std::vector<std::int64_t>> cases = {{5, 5, 5, 5}, {3, 4, 5, 6}, {2, 2, 3, 3}, {7, 1, 4, 2}};
  for (std::int64_t m = 10; m <= 15; ++m) {
    for (const auto& dims : cases) {
      const LinkProblem lp(m, dims);
      const auto rep = linkrank::link_rank(lp);
      ExactInt sum = 0;
      for (std::uint32_t mask = 1; mask < 16; ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < 4; ++k) {
          if (mask & (1u << k)) idx.push_back(k);
        }
        const LinkProblem sub = lp.sublink(idx);
        sum += idx.size() == 1 ? ExactInt(linkrank::knot_rank(m, sub.dim(0))) : linkrank::brunnian_rank(sub).rank;
      }
      EXPECT_EQ(rep.total_rank, sum);
    }
  }
}

TEST(LinkRank, DecompositionSkippedForManyComponents) {
  const LinkProblem lp(40, std::vector<std::int64_t>(13, 30));
  const auto rep = linkrank::link_rank(lp);
  EXPECT_FALSE(rep.subset_decomposition.has_value());
}

TEST(EqualDimRank, Examples) {
  EXPECT_EQ(linkrank::equal_dim_rank(6, 3, 2), 4);
  EXPECT_EQ(linkrank::equal_dim_rank(7, 4, 2), 1);
  EXPECT_EQ(linkrank::equal_dim_rank(12, 3, 2), 0);
  EXPECT_THROW(linkrank::equal_dim_rank(6, 1, 2), linkrank::invalid_input);
  EXPECT_THROW(linkrank::equal_dim_rank(6, 4, 2), linkrank::invalid_input);
}

TEST(EqualDimRank, AgreesWithGeneralFormula) {
  for (std::int64_t p = 2; p <= 12; ++p) {
    for (std::int64_t m = p + 3; m <= 3 * p + 2; ++m) {
      for (std::int64_t r = 1; r <= 5; ++r) {
        const ExactInt general = linkrank::link_rank(LinkProblem(m, std::vector<std::int64_t>(r, p))).total_rank;
        EXPECT_EQ(linkrank::equal_dim_rank_formula(m, p, r), general) << "m=" << m << " p=" << p << " r=" << r;
      }
    }
  }
}

TEST(Finiteness, Examples) {
  EXPECT_FALSE(linkrank::brunnian_is_infinite(LinkProblem(8, {5, 5})));
  EXPECT_TRUE(linkrank::brunnian_is_infinite(LinkProblem(8, {5, 5, 5})));
  EXPECT_TRUE(linkrank::brunnian_is_infinite(LinkProblem(9, {6, 6})));
  EXPECT_TRUE(linkrank::link_is_infinite(LinkProblem(8, {5, 5, 5})));
  EXPECT_TRUE(linkrank::link_is_infinite(LinkProblem(10, {7})));
  EXPECT_FALSE(linkrank::link_is_infinite(LinkProblem(8, {5, 5})));
  EXPECT_THROW(linkrank::brunnian_is_infinite(LinkProblem(8, {5})), linkrank::invalid_input);
}

TEST(Finiteness, CriteriaMatchRanks) {
  for (std::int64_t m = 4; m <= 18; ++m) {
    for (std::int64_t p1 = 1; p1 < m - 2; ++p1) {
      for (std::int64_t p2 = p1; p2 < m - 2; ++p2) {
        const LinkProblem two(m, {p1, p2});
        EXPECT_EQ(linkrank::brunnian_infinite_criterion(two), linkrank::brunnian_rank(two).rank > 0);
        EXPECT_EQ(linkrank::link_infinite_criterion(two), linkrank::link_rank(two).total_rank > 0);
        for (std::int64_t p3 = p2; p3 < m - 2; p3 += 2) {
          const LinkProblem three(m, {p1, p2, p3});
          EXPECT_EQ(linkrank::brunnian_infinite_criterion(three), linkrank::brunnian_rank(three).rank > 0);
          EXPECT_EQ(linkrank::link_infinite_criterion(three), linkrank::link_rank(three).total_rank > 0);
        }
      }
    }
  }
}

TEST(Finiteness, EqualDimensionTwoComponents) {
  for (std::int64_t m = 5; m <= 42; ++m) {
    for (std::int64_t p = 2; p < m - 2; ++p) {
      const std::int64_t num = m - 3;
      const std::int64_t den = m - p - 2;
      bool expected = false;
      if (num % den == 0) {
        const std::int64_t t = num / den;
        const std::set<std::int64_t> excluded =
            (m - p) % 2 == 1 ? std::set<std::int64_t>{5} : std::set<std::int64_t>{3, 5, 7};
        expected = excluded.count(t) == 0;
      }
      EXPECT_EQ(linkrank::brunnian_is_infinite(LinkProblem(m, {p, p})), expected) << "m=" << m << " p=" << p;
    }
  }
}

TEST(BrunnianRank, GrowsAlongTopDimension) {
  const ExactInt at15 = linkrank::brunnian_rank(LinkProblem(15, {12, 12})).rank;
  const ExactInt at30 = linkrank::brunnian_rank(LinkProblem(30, {27, 27})).rank;
  EXPECT_GT(at30, at15);
}

TEST(BrunnianRank, BorromeanFamily) {
  for (std::int64_t k = 2; k <= 8; ++k) {
    EXPECT_EQ(linkrank::brunnian_rank(LinkProblem(3 * k, {2 * k - 1, 2 * k - 1, 2 * k - 1})).rank, 1) << k;
  }
}
