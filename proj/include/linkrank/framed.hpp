/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Partially framed links S^{p_k} x D^{l_k} in S^m, and the finiteness
// predicates for handlebodies, thickenings and mapping class groups that
// follow from them.

#ifndef LINKRANK_FRAMED_HPP
#define LINKRANK_FRAMED_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkrank/arith.hpp"
#include "linkrank/error.hpp"
#include "linkrank/ranks.hpp"
#include "linkrank/stiefel.hpp"

namespace linkrank {

struct FramedComponent {
  std::int64_t p;
  std::int64_t l;
  bool operator==(const FramedComponent&) const = default;
};

class FramedLinkProblem {
 public:
  FramedLinkProblem(std::int64_t m, std::vector<FramedComponent> components)
      : m_(m), components_(std::move(components)), link_(m, dims_of(components_)) {
    for (const FramedComponent& c : components_) {
      detail::require(c.l >= 0 && c.l <= m_ - c.p,
                      "framing l = " + std::to_string(c.l) + " must lie in [0, m - p] = [0, " +
                          std::to_string(m_ - c.p) + "]");
    }
  }

  // Every component framed by D^{m - p_k}.
  static FramedLinkProblem fully_framed(const LinkProblem& lp) {
    std::vector<FramedComponent> comps;
    for (std::int64_t p : lp.dims()) comps.push_back({p, lp.m() - p});
    return FramedLinkProblem(lp.m(), std::move(comps));
  }

  std::int64_t m() const { return m_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<FramedComponent>& components() const { return components_; }
  const LinkProblem& link() const { return link_; }

 private:
  static std::vector<std::int64_t> dims_of(const std::vector<FramedComponent>& comps) {
    std::vector<std::int64_t> dims;
    for (const FramedComponent& c : comps) dims.push_back(c.p);
    return dims;
  }

  std::int64_t m_;
  std::vector<FramedComponent> components_;
  LinkProblem link_;
};

struct FramedRankReport {
  RankReport link;
  std::vector<int> stiefel_ranks;
  ExactInt total_rank;
  bool infinite = false;
};

// rk of the unframed link group plus sum_k rk pi_{p_k}(V_{m-p_k, l_k}).
inline FramedRankReport framed_rank(const FramedLinkProblem& fp) {
  FramedRankReport out;
  out.link = link_rank(fp.link());
  out.total_rank = out.link.total_rank;
  for (const FramedComponent& c : fp.components()) {
    const int s = stiefel_rank(c.p, fp.m() - c.p, c.l);
    out.stiefel_ranks.push_back(s);
    out.total_rank += s;
  }
  out.infinite = out.total_rank > 0;
  return out;
}

inline bool framed_knot_is_infinite(std::int64_t m, std::int64_t p, std::int64_t l) {
  detail::require(p >= 1, "framed knot: p must be positive");
  detail::require(p < m - 2, "framed knot: codimension must exceed 2");
  detail::require(l >= 1 && l <= m - p, "framed knot: l must lie in [1, m - p]");
  return ((p + 1) % 4 == 0 && 2 * m < 3 * p + 2 * l + 2) ||
         ((p + 1) % 2 == 0 && m == 2 * p + 1) ||
         (p % 2 == 0 && m == 2 * p + l);
}

// Subsequence test for links with every component fully framed.
inline bool fully_framed_criterion(const LinkProblem& lp) {
  const std::int64_t m = lp.m();
  for (std::int64_t p : lp.dims()) {
    if ((p + 1) % 4 == 0) return true;
    if ((m + 1) % 4 == 0 && m + 1 == 2 * p + 2) return true;
  }
  for (const ComponentSubset& s : detail::subsets_of_size_at_least(lp.size(), 2)) {
    if (detail::brunnian_criterion(lp.sublink(s))) return true;
  }
  return false;
}

inline bool fully_framed_is_infinite(const LinkProblem& lp) {
  const bool by_criterion = fully_framed_criterion(lp);
  const bool by_rank = framed_rank(FramedLinkProblem::fully_framed(lp)).total_rank > 0;
  detail::ensure(by_criterion == by_rank, "fully framed finiteness criterion disagrees with the rank formula");
  return by_criterion;
}

enum class Verdict { finite, infinite, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::finite: return "finite";
    case Verdict::infinite: return "infinite";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

// Handlebodies D^{m+1} with handles of dimensions p_k + 1.
struct HandlebodyReport {
  std::int64_t m = 0;
  std::vector<std::int64_t> dims;  // p_k
  bool weak_conditions = false;    // 2p_k - p_j + 2 <= m and 2p_k - p_j >= 1
  bool strict_conditions = false;  // 2p_k - p_j + 2 < m and 2p_k - p_j > 1
  bool codimension_valid = false;
  Verdict thickening_set = Verdict::inconclusive;
  Verdict handlebody_set = Verdict::inconclusive;
  std::optional<ExactInt> group_rank;  // strict conditions only
};

inline HandlebodyReport handlebody_report(std::int64_t m_plus_1, const std::vector<std::int64_t>& handle_dims) {
  HandlebodyReport out;
  out.m = m_plus_1 - 1;
  for (std::int64_t h : handle_dims) out.dims.push_back(h - 1);
  if (out.dims.empty()) return out;

  out.weak_conditions = true;
  out.strict_conditions = true;
  for (std::int64_t pk : out.dims) {
    for (std::int64_t pj : out.dims) {
      const std::int64_t d = 2 * pk - pj;
      if (!(d + 2 <= out.m && d >= 1)) out.weak_conditions = false;
      if (!(d + 2 < out.m && d > 1)) out.strict_conditions = false;
    }
  }
  out.codimension_valid = true;
  for (std::int64_t p : out.dims) {
    if (p < 1 || p >= out.m - 2) out.codimension_valid = false;
  }
  if (!out.codimension_valid) return out;

  const LinkProblem lp(out.m, out.dims);
  if (out.weak_conditions && !fully_framed_is_infinite(lp)) {
    out.thickening_set = Verdict::finite;
    out.handlebody_set = Verdict::finite;
  }
  if (out.strict_conditions) {
    out.group_rank = framed_rank(FramedLinkProblem::fully_framed(lp)).total_rank;
    out.thickening_set = *out.group_rank > 0 ? Verdict::infinite : Verdict::finite;
  }
  return out;
}

enum class McgVerdict { finite_index, infinite_index, inconclusive };

inline const char* to_string(McgVerdict v) {
  switch (v) {
    case McgVerdict::finite_index: return "finite_index";
    case McgVerdict::infinite_index: return "infinite_index";
    case McgVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

// Index of the restriction image in the mapping class group of
// #_k (S^{p_k} x S^{m - p_k - 1}).
inline McgVerdict mcg_finite_index(std::int64_t m, const std::vector<std::int64_t>& dims) {
  if (m < 5 || dims.empty()) return McgVerdict::inconclusive;
  for (std::int64_t p : dims) {
    if (p < m / 2 || p < 1 || p >= m - 2) return McgVerdict::inconclusive;
  }
  return fully_framed_is_infinite(LinkProblem(m, dims)) ? McgVerdict::infinite_index : McgVerdict::finite_index;
}

}  // namespace linkrank

#endif  // LINKRANK_FRAMED_HPP
