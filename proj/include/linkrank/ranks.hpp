/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Ranks and finiteness of the groups of knots, Brunnian links and general
// links of codimension > 2.
//
// Each finiteness question is answered twice: once constructively (a
// Diophantine solution, optionally inside a finiteness-checking set) and
// once from the rank formula.  The *_criterion functions give the first
// route alone; the *_is_infinite functions evaluate both and throw
// internal_error if they disagree.

#ifndef LINKRANK_RANKS_HPP
#define LINKRANK_RANKS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkrank/arith.hpp"
#include "linkrank/error.hpp"
#include "linkrank/fcs.hpp"
#include "linkrank/liedim.hpp"

namespace linkrank {

// Ambient sphere dimension m and component dimensions p_1..p_r, with
// 1 <= p_k < m - 2.
class LinkProblem {
 public:
  LinkProblem(std::int64_t m, std::vector<std::int64_t> dims) : m_(m), dims_(std::move(dims)) {
    detail::require(!dims_.empty(), "a link needs at least one component");
    for (std::int64_t p : dims_) {
      detail::require(p >= 1, "component dimensions must be positive, got " + std::to_string(p));
      detail::require(p < m_ - 2, "codimension must exceed 2: p = " + std::to_string(p) +
                                      " is not below m - 2 = " + std::to_string(m_ - 2));
    }
  }

  std::int64_t m() const { return m_; }
  std::size_t size() const { return dims_.size(); }
  std::span<const std::int64_t> dims() const { return dims_; }
  std::int64_t dim(std::size_t k) const { return dims_.at(k); }

  // Degree of the Lie generator attached to component k.
  std::int64_t weight(std::size_t k) const { return m_ - dims_.at(k) - 2; }
  std::vector<std::int64_t> weights() const {
    std::vector<std::int64_t> w;
    w.reserve(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) w.push_back(weight(k));
    return w;
  }
  GeneratorSystem generators() const { return GeneratorSystem(weights()); }

  // Weighted degree every contributing multidegree must reach (m - 3).
  std::int64_t target_degree() const { return m_ - 3; }

  LinkProblem sublink(std::span<const std::size_t> indices) const {
    std::vector<std::int64_t> dims;
    for (std::size_t k : indices) dims.push_back(dims_.at(k));
    return LinkProblem(m_, std::move(dims));
  }

 private:
  std::int64_t m_;
  std::vector<std::int64_t> dims_;
};

struct Contribution {
  MultiDegree multidegree;
  ExactInt multiplicity;
  bool operator==(const Contribution&) const = default;
};

struct BrunnianRank {
  ExactInt rank;
  std::vector<Contribution> contributions;
};

// Ascending zero-based component indices.
using ComponentSubset = std::vector<std::size_t>;

struct RankReport {
  ExactInt total_rank;
  std::optional<ExactInt> brunnian_rank;  // r >= 2 only
  std::vector<int> knot_ranks;
  bool infinite = false;
  std::vector<Contribution> contributions;
  std::optional<std::map<ComponentSubset, ExactInt>> subset_decomposition;
};

// The decomposition over subsets is only filled in up to this many
// components (2^r - 1 Brunnian sub-problems).
inline constexpr std::size_t kMaxDecompositionComponents = 12;

namespace detail {

// c_{p,m}: 1 iff 4 | p + 1 and m < 3p/2 + 2.
inline int knot_coefficient(std::int64_t m, std::int64_t p) {
  return ((p + 1) % 4 == 0 && 2 * m < 3 * p + 4) ? 1 : 0;
}

// delta_{2(m-3)/(m-p-2), 5-(-1)^{m-p}} evaluated as an exact rational equality.
inline int knot_delta(std::int64_t m, std::int64_t p) {
  const std::int64_t rhs = (m - p) % 2 == 0 ? 4 : 6;
  return 2 * (m - 3) == rhs * (m - p - 2) ? 1 : 0;
}

inline ParityPair link_parities(const LinkProblem& lp, std::size_t a, std::size_t b) {
  return ParityPair{parity_of(lp.m() - lp.dim(a)), parity_of(lp.m() - lp.dim(b))};
}

inline BrunnianRank brunnian_rank(const LinkProblem& lp, DimensionCache& cache) {
  const std::vector<std::int64_t> weights = lp.weights();
  const std::vector<std::int64_t> ones(weights.size(), 1);
  BrunnianRank out;
  for (MultiDegree& x : enumerate_diophantine(weights, lp.target_degree(), ones)) {
    ExactInt mult = cache.multiplicity(weights, x.coords());
    out.rank += mult;
    out.contributions.push_back({std::move(x), std::move(mult)});
  }
  ensure(out.rank >= 0, "Brunnian rank came out negative");
  return out;
}

// r >= 2 constructive test on one (sub)problem, no rank evaluation.
inline bool brunnian_criterion(const LinkProblem& lp) {
  const std::vector<std::int64_t> weights = lp.weights();
  const std::vector<std::int64_t> ones(weights.size(), 1);
  const auto solutions = enumerate_diophantine(weights, lp.target_degree(), ones);
  if (lp.size() > 2) return !solutions.empty();
  const ParityPair pp = link_parities(lp, 0, 1);
  for (const MultiDegree& x : solutions) {
    if (fcs_contains(pp, x[0], x[1])) return true;
  }
  return false;
}

inline std::vector<ComponentSubset> subsets_of_size_at_least(std::size_t r, std::size_t min_size) {
  std::vector<ComponentSubset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    ComponentSubset s;
    for (std::size_t k = 0; k < r; ++k) {
      if (mask & (std::uint64_t{1} << k)) s.push_back(k);
    }
    if (s.size() >= min_size) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

// Rank (0 or 1) of the group of knots S^p in S^m.
inline int knot_rank(std::int64_t m, std::int64_t p) {
  detail::require(p >= 1, "knot_rank: p must be positive");
  detail::require(p < m - 2, "knot_rank: codimension must exceed 2");
  return detail::knot_coefficient(m, p);
}

// Sum of m(x) over positive x with weighted degree m - 3.
inline BrunnianRank brunnian_rank(const LinkProblem& lp) {
  detail::require(lp.size() >= 2, "brunnian_rank needs at least two components; use knot_rank for knots");
  detail::DimensionCache cache;
  return detail::brunnian_rank(lp, cache);
}

// Total rank.  For r >= 2 the sum of m(x) runs over nonnegative x with
// weighted degree m - 3, corrected per component by c_{p_k,m} - delta_k.
// The result is cross-checked against the sum of Brunnian ranks of all
// sub-links when r <= kMaxDecompositionComponents.
inline RankReport link_rank(const LinkProblem& lp) {
  RankReport report;
  const std::size_t r = lp.size();
  for (std::size_t k = 0; k < r; ++k) report.knot_ranks.push_back(knot_rank(lp.m(), lp.dim(k)));

  if (r == 1) {
    report.total_rank = report.knot_ranks[0];
    report.infinite = report.total_rank > 0;
    report.subset_decomposition = std::map<ComponentSubset, ExactInt>{{{0}, report.total_rank}};
    return report;
  }

  detail::DimensionCache cache;
  const std::vector<std::int64_t> weights = lp.weights();
  const std::vector<std::int64_t> zeros(r, 0);
  for (MultiDegree& x : enumerate_diophantine(weights, lp.target_degree(), zeros)) {
    detail::ensure(!x.is_zero(), "zero multidegree reached the target degree");
    ExactInt mult = cache.multiplicity(weights, x.coords());
    report.total_rank += mult;
    report.contributions.push_back({std::move(x), std::move(mult)});
  }
  for (std::size_t k = 0; k < r; ++k) {
    report.total_rank += report.knot_ranks[k] - detail::knot_delta(lp.m(), lp.dim(k));
  }
  detail::ensure(report.total_rank >= 0, "link rank came out negative");

  report.brunnian_rank = detail::brunnian_rank(lp, cache).rank;

  if (r <= kMaxDecompositionComponents) {
    std::map<ComponentSubset, ExactInt> parts;
    ExactInt sum = 0;
    for (std::size_t k = 0; k < r; ++k) {
      parts[{k}] = report.knot_ranks[k];
      sum += report.knot_ranks[k];
    }
    for (const ComponentSubset& s : detail::subsets_of_size_at_least(r, 2)) {
      ExactInt part = s.size() == r ? *report.brunnian_rank : detail::brunnian_rank(lp.sublink(s), cache).rank;
      sum += part;
      parts.emplace(s, std::move(part));
    }
    detail::ensure(sum == report.total_rank,
                   "subset decomposition (" + to_string(sum) + ") disagrees with the rank formula (" +
                       to_string(report.total_rank) + ")");
    report.subset_decomposition = std::move(parts);
  }

  report.infinite = report.total_rank > 0;
  return report;
}

// Rank for r components of equal dimension p via Witt polynomials, with
// t = (m - 3)/(m - p - 2):
//   r (w_{t-1,m-p}(r) + c_{p,m} - delta) - w_{t,m-p}(r).
inline ExactInt equal_dim_rank_formula(std::int64_t m, std::int64_t p, std::int64_t r) {
  detail::require(p > 1, "equal_dim_rank: requires p > 1");
  detail::require(p < m - 2, "equal_dim_rank: codimension must exceed 2");
  detail::require(r >= 1, "equal_dim_rank: requires at least one component");
  const ExactRat t(ExactInt(m - 3), ExactInt(m - p - 2));
  const ExactInt per_component =
      witt_super(t - 1, m - p, r) + detail::knot_coefficient(m, p) - detail::knot_delta(m, p);
  return r * per_component - witt_super(t, m - p, r);
}

// As equal_dim_rank_formula, checked against link_rank.
inline ExactInt equal_dim_rank(std::int64_t m, std::int64_t p, std::int64_t r) {
  ExactInt value = equal_dim_rank_formula(m, p, r);
  const LinkProblem lp(m, std::vector<std::int64_t>(static_cast<std::size_t>(r), p));
  const ExactInt general = link_rank(lp).total_rank;
  detail::ensure(value == general, "Witt-polynomial rank " + to_string(value) +
                                       " disagrees with the general formula " + to_string(general));
  return value;
}

// Constructive Brunnian test: a positive solution of the degree equation
// (r > 2), or one inside the finiteness-checking set (r = 2).
inline bool brunnian_infinite_criterion(const LinkProblem& lp) {
  detail::require(lp.size() >= 2, "Brunnian finiteness needs at least two components");
  return detail::brunnian_criterion(lp);
}

inline bool brunnian_is_infinite(const LinkProblem& lp) {
  const bool by_criterion = brunnian_infinite_criterion(lp);
  const bool by_rank = brunnian_rank(lp).rank > 0;
  detail::ensure(by_criterion == by_rank, "Brunnian finiteness criterion disagrees with the rank formula");
  return by_criterion;
}

// Some sub-link is an infinite knot (s = 1) or an infinite Brunnian link
// (s >= 2).
inline bool link_infinite_criterion(const LinkProblem& lp) {
  for (std::size_t k = 0; k < lp.size(); ++k) {
    if (detail::knot_coefficient(lp.m(), lp.dim(k)) == 1) return true;
  }
  for (const ComponentSubset& s : detail::subsets_of_size_at_least(lp.size(), 2)) {
    if (detail::brunnian_criterion(lp.sublink(s))) return true;
  }
  return false;
}

inline bool link_is_infinite(const LinkProblem& lp) {
  const bool by_criterion = link_infinite_criterion(lp);
  const bool by_rank = link_rank(lp).total_rank > 0;
  detail::ensure(by_criterion == by_rank, "link finiteness criterion disagrees with the rank formula");
  return by_criterion;
}

}  // namespace linkrank

#endif  // LINKRANK_RANKS_HPP
