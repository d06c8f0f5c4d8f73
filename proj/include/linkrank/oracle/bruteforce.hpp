/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Brute-force dimensions of multigraded components of the free Lie
// superalgebra, and of the kernel of (u_k) -> sum_k [u_k, P_k].
//
// L_x is realised as the span of the left-normed brackets of all words of
// multidegree x inside the free associative superalgebra; dimensions are
// exact ranks.

#ifndef LINKRANK_ORACLE_BRUTEFORCE_HPP
#define LINKRANK_ORACLE_BRUTEFORCE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linkrank/arith.hpp"
#include "linkrank/error.hpp"
#include "linkrank/liedim.hpp"
#include "linkrank/oracle/linalg.hpp"
#include "linkrank/oracle/superalgebra.hpp"

namespace linkrank::oracle {

inline constexpr std::int64_t kDefaultLetterBudget = 8;

// Hard cap on the number of words of one multidegree (rows and columns of
// the spanning matrix).
inline constexpr std::int64_t kMaxWords = 5000;

// All words with letter counts x, in lexicographic order.
inline std::vector<SuperWord> words_of_multidegree(const GeneratorSystem& gs, const MultiDegree& x) {
  linkrank::detail::require_same_length(gs.size(), x.size(), "words_of_multidegree");
  std::vector<std::size_t> letters;
  for (std::size_t k = 0; k < x.size(); ++k) letters.insert(letters.end(), x[k], k);
  std::vector<SuperWord> out;
  do {
    SuperWord w;
    w.reserve(letters.size());
    for (std::size_t k : letters) w.push_back(SuperLetter{k, gs.weight(k)});
    out.push_back(std::move(w));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

namespace detail {

inline void check_budget(const MultiDegree& x, std::int64_t budget) {
  linkrank::detail::require(budget >= 1, "oracle letter budget must be positive");
  if (x.total() > budget) {
    throw resource_limit("oracle: multidegree " + x.str() + " has " + std::to_string(x.total()) +
                         " letters, above the budget of " + std::to_string(budget));
  }
  const ExactInt words = multinomial(x.coords());
  if (words > kMaxWords) {
    throw resource_limit("oracle: multidegree " + x.str() + " has " + to_string(words) +
                         " words, above the hard limit of " + std::to_string(kMaxWords));
  }
}

// Coordinates of a polynomial with respect to the word list, scaled to be
// integral.
class WordIndex {
 public:
  explicit WordIndex(const std::vector<SuperWord>& words) {
    for (std::size_t i = 0; i < words.size(); ++i) index_.emplace(words[i], static_cast<std::uint32_t>(i));
  }

  std::size_t size() const { return index_.size(); }

  SparseVector coordinates(const SuperPolynomial& p) const {
    ExactInt lcm = 1;
    for (const auto& [w, c] : p.terms()) {
      const ExactInt den = boost::multiprecision::denominator(c);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    SparseVector v;
    v.reserve(p.size());
    for (const auto& [w, c] : p.terms()) {
      auto it = index_.find(w);
      linkrank::detail::ensure(it != index_.end(), "polynomial leaves its multidegree");
      v.emplace_back(it->second, boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  std::vector<ExactInt> dense(const SuperPolynomial& p) const {
    std::vector<ExactInt> row(index_.size());
    for (auto& [i, c] : coordinates(p)) row[i] = c;
    return row;
  }

 private:
  std::map<SuperWord, std::uint32_t> index_;
};

}  // namespace detail

// Independent left-normed brackets spanning L_x, chosen greedily in word
// order.
inline std::vector<SuperPolynomial> component_basis(const GeneratorSystem& gs, const MultiDegree& x,
                                                    std::int64_t budget = kDefaultLetterBudget) {
  linkrank::detail::require_same_length(gs.size(), x.size(), "component_basis");
  linkrank::detail::require(x.total() >= 1, "oracle: the zero multidegree has no brackets");
  detail::check_budget(x, budget);

  const std::vector<SuperWord> words = words_of_multidegree(gs, x);
  const detail::WordIndex index(words);
  EchelonBasis echelon;
  std::vector<SuperPolynomial> basis;
  for (const SuperWord& w : words) {
    SuperPolynomial b = left_normed_bracket(w);
    if (b.is_zero()) continue;
    if (echelon.insert(index.coordinates(b))) basis.push_back(std::move(b));
  }
  return basis;
}

inline std::int64_t component_dim_bruteforce(const GeneratorSystem& gs, const MultiDegree& x,
                                             std::int64_t budget = kDefaultLetterBudget) {
  return static_cast<std::int64_t>(component_basis(gs, x, budget).size());
}

struct WhiteheadAnalysis {
  std::int64_t source_dim = 0;  // sum_k dim L_{x - e_k}
  std::int64_t target_dim = 0;  // dim L_x
  std::int64_t rank = 0;
  std::int64_t kernel_dim = 0;
};

// The map (u_1..u_r) -> [u_1, P_1] + ... + [u_r, P_r] restricted to
// multidegree x, from the sum of the L_{x - e_k} to L_x.
inline WhiteheadAnalysis whitehead_map_analysis(const GeneratorSystem& gs, const MultiDegree& x,
                                                std::int64_t budget = kDefaultLetterBudget) {
  linkrank::detail::require_same_length(gs.size(), x.size(), "whitehead_map_analysis");
  linkrank::detail::require(x.all_positive(), "whitehead_map_analysis: every coordinate must be positive");
  linkrank::detail::require(x.total() >= 2, "whitehead_map_analysis: needs at least two letters");
  detail::check_budget(x, budget);

  const std::vector<SuperWord> words = words_of_multidegree(gs, x);
  const detail::WordIndex index(words);

  WhiteheadAnalysis out;
  DenseMatrix images;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    std::vector<std::int64_t> shifted(x.coords().begin(), x.coords().end());
    --shifted[k];
    const SuperPolynomial generator = SuperPolynomial::letter(SuperLetter{k, gs.weight(k)});
    for (const SuperPolynomial& u : component_basis(gs, MultiDegree(shifted), budget)) {
      images.push_back(index.dense(super_bracket(u, generator)));
      ++out.source_dim;
    }
  }
  out.target_dim = component_dim_bruteforce(gs, x, budget);
  out.rank = static_cast<std::int64_t>(bareiss_rank(std::move(images)));
  out.kernel_dim = out.source_dim - out.rank;
  return out;
}

}  // namespace linkrank::oracle

#endif  // LINKRANK_ORACLE_BRUTEFORCE_HPP
