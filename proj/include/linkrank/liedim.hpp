/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Dimensions of the multigraded components of a free graded Lie
// superalgebra, the "multiplicities" built from them, Witt polynomials and
// the Diophantine enumeration that indexes rank sums.

#ifndef LINKRANK_LIEDIM_HPP
#define LINKRANK_LIEDIM_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkrank/arith.hpp"
#include "linkrank/error.hpp"

namespace linkrank {

// Degrees a_1..a_r of the free generators P_1..P_r.  In link problems
// a_k = m - p_k - 2.
class GeneratorSystem {
 public:
  explicit GeneratorSystem(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
    detail::require(!weights_.empty(), "generator system needs at least one generator");
    for (std::int64_t a : weights_) {
      detail::require(a >= 1, "generator degrees must be positive, got " + std::to_string(a));
    }
  }
  GeneratorSystem(std::initializer_list<std::int64_t> weights)
      : GeneratorSystem(std::vector<std::int64_t>(weights)) {}

  std::size_t size() const { return weights_.size(); }
  std::span<const std::int64_t> weights() const { return weights_; }
  std::int64_t weight(std::size_t k) const { return weights_.at(k); }
  int parity(std::size_t k) const { return static_cast<int>(weights_.at(k) % 2); }

  bool operator==(const GeneratorSystem&) const = default;

 private:
  std::vector<std::int64_t> weights_;
};

// Occurrence counts (x_1..x_r) of each generator; indexes L_{x_1..x_r}.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    for (std::int64_t x : coords_) {
      detail::require(x >= 0, "multidegree entries must be nonnegative");
    }
  }
  MultiDegree(std::initializer_list<std::int64_t> coords)
      : MultiDegree(std::vector<std::int64_t>(coords)) {}

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  std::int64_t total() const {
    std::int64_t s = 0;
    for (std::int64_t x : coords_) s += x;
    return s;
  }
  bool all_positive() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x > 0; });
  }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(coords_[k]);
    }
    return out + ")";
  }

  auto operator<=>(const MultiDegree&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

namespace detail {

inline void require_same_length(std::size_t r, std::size_t n, const char* what) {
  require(r == n, std::string(what) + ": multidegree has " + std::to_string(n) +
                      " entries but the generator system has " + std::to_string(r));
}

inline std::int64_t weighted_sum(std::span<const std::int64_t> weights,
                                 std::span<const std::int64_t> x) {
  std::int64_t g = 0;
  for (std::size_t k = 0; k < x.size(); ++k) g += weights[k] * x[k];
  return g;
}

// Closed-form dimension d(x).  Accepts negative coordinates (d = 0) and the
// zero multidegree (d = 1 by convention).
inline ExactInt dimension_formula(std::span<const std::int64_t> weights,
                                  std::span<const std::int64_t> x) {
  std::int64_t total = 0;
  for (std::int64_t v : x) {
    if (v < 0) return 0;
    total += v;
  }
  if (total == 0) return 1;

  const std::int64_t g = weighted_sum(weights, x);
  std::int64_t common = 0;
  for (std::int64_t v : x) common = std::gcd(common, v);

  ExactInt sum = 0;
  std::vector<std::int64_t> reduced(x.size());
  for (std::int64_t i : divisors(common)) {
    const int mu = moebius(i);
    if (mu == 0) continue;
    for (std::size_t k = 0; k < x.size(); ++k) reduced[k] = x[k] / i;
    ExactInt term = multinomial(reduced);
    if ((g / i) % 2 != 0) term = -term;
    if (mu < 0) term = -term;
    sum += term;
  }
  if (g % 2 != 0) sum = -sum;

  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(sum, ExactInt(total), quotient, remainder);
  ensure(remainder == 0, "dimension formula is not integral");
  ensure(quotient >= 0, "dimension formula is negative");
  return quotient;
}

}  // namespace detail

inline std::int64_t weighted_degree(const GeneratorSystem& gs, const MultiDegree& x) {
  detail::require_same_length(gs.size(), x.size(), "weighted_degree");
  return detail::weighted_sum(gs.weights(), x.coords());
}

inline ExactInt lie_component_dim(const GeneratorSystem& gs, const MultiDegree& x) {
  detail::require_same_length(gs.size(), x.size(), "lie_component_dim");
  return detail::dimension_formula(gs.weights(), x.coords());
}

// m(x) = sum_k d(x - e_k) - d(x).
inline ExactInt multiplicity(const GeneratorSystem& gs, const MultiDegree& x) {
  detail::require_same_length(gs.size(), x.size(), "multiplicity");
  std::vector<std::int64_t> shifted(x.coords().begin(), x.coords().end());
  ExactInt result = -detail::dimension_formula(gs.weights(), shifted);
  for (std::size_t k = 0; k < shifted.size(); ++k) {
    --shifted[k];
    result += detail::dimension_formula(gs.weights(), shifted);
    ++shifted[k];
  }
  return result;
}

namespace detail {

// Memoised d and m.  d depends only on the multiset of (x_k, parity of a_k)
// over nonzero x_k, which is the cache key, so permuted and
// parity-equivalent queries (including those of different sub-systems)
// share entries.
class DimensionCache {
 public:
  ExactInt dim(std::span<const std::int64_t> weights, std::span<const std::int64_t> x) {
    Key key;
    key.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] < 0) return 0;
      if (x[k] > 0) key.emplace_back(x[k], static_cast<int>(weights[k] % 2));
    }
    if (key.empty()) return 1;
    std::sort(key.begin(), key.end());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    std::vector<std::int64_t> coords;
    std::vector<std::int64_t> representative;
    for (const auto& [count, parity] : key) {
      coords.push_back(count);
      representative.push_back(parity == 0 ? 2 : 1);
    }
    ExactInt value = dimension_formula(representative, coords);
    cache_.emplace(std::move(key), value);
    return value;
  }

  ExactInt multiplicity(std::span<const std::int64_t> weights, std::span<const std::int64_t> x) {
    std::vector<std::int64_t> shifted(x.begin(), x.end());
    ExactInt result = -dim(weights, shifted);
    for (std::size_t k = 0; k < shifted.size(); ++k) {
      --shifted[k];
      result += dim(weights, shifted);
      ++shifted[k];
    }
    return result;
  }

 private:
  using Key = std::vector<std::pair<std::int64_t, int>>;
  std::map<Key, ExactInt> cache_;
};

}  // namespace detail

// d and m for one generator system, memoised across calls.
class DimensionTable {
 public:
  explicit DimensionTable(GeneratorSystem gs) : gs_(std::move(gs)) {}

  const GeneratorSystem& generators() const { return gs_; }

  ExactInt dim(const MultiDegree& x) {
    detail::require_same_length(gs_.size(), x.size(), "DimensionTable::dim");
    return cache_.dim(gs_.weights(), x.coords());
  }

  ExactInt multiplicity(const MultiDegree& x) {
    detail::require_same_length(gs_.size(), x.size(), "DimensionTable::multiplicity");
    return cache_.multiplicity(gs_.weights(), x.coords());
  }

 private:
  GeneratorSystem gs_;
  detail::DimensionCache cache_;
};

// Necklace polynomial w_t(r) = (1/t) sum_{i|t} mu(i) r^{t/i}.
inline ExactInt witt(std::int64_t t, std::int64_t r) {
  detail::require(t >= 1, "witt: t must be positive");
  detail::require(r >= 1, "witt: r must be positive");
  ExactInt sum = 0;
  for (std::int64_t i : divisors(t)) {
    const int mu = moebius(i);
    if (mu == 0) continue;
    ExactInt power = boost::multiprecision::pow(ExactInt(r), static_cast<unsigned>(t / i));
    sum += mu > 0 ? power : ExactInt(-power);
  }
  detail::ensure(sum % t == 0, "witt polynomial value is not integral");
  return sum / t;
}

// Super correction w_{t,s}(r); zero unless t is a positive integer.
inline ExactInt witt_super(const ExactRat& t, std::int64_t s, std::int64_t r) {
  detail::require(s >= 1, "witt_super: s must be positive");
  if (!is_integral(t) || t <= 0) return 0;
  const auto n = static_cast<std::int64_t>(boost::multiprecision::numerator(t));
  ExactInt value = witt(n, r);
  if (s % 2 == 1 && n % 4 == 2) value += witt(n / 2, r);
  return value;
}

// All x with x_k >= lower_bounds[k] and sum a_k x_k == target, in
// lexicographic order.
inline std::vector<MultiDegree> enumerate_diophantine(std::span<const std::int64_t> weights,
                                                      std::int64_t target,
                                                      std::span<const std::int64_t> lower_bounds) {
  detail::require(!weights.empty(), "enumerate_diophantine: no weights");
  detail::require(weights.size() == lower_bounds.size(),
                  "enumerate_diophantine: weights and bounds differ in length");
  detail::require(target >= 0, "enumerate_diophantine: target must be nonnegative");
  for (std::int64_t a : weights) detail::require(a >= 1, "enumerate_diophantine: weights must be positive");
  for (std::int64_t b : lower_bounds) detail::require(b >= 0, "enumerate_diophantine: bounds must be nonnegative");

  std::vector<MultiDegree> out;
  std::vector<std::int64_t> current(weights.size());
  const std::size_t r = weights.size();
  std::function<void(std::size_t, std::int64_t)> recurse = [&](std::size_t k, std::int64_t remaining) {
    if (k + 1 == r) {
      if (remaining % weights[k] != 0) return;
      const std::int64_t x = remaining / weights[k];
      if (x < lower_bounds[k]) return;
      current[k] = x;
      out.emplace_back(current);
      return;
    }
    for (std::int64_t x = lower_bounds[k]; x * weights[k] <= remaining; ++x) {
      current[k] = x;
      recurse(k + 1, remaining - x * weights[k]);
    }
  };
  recurse(0, target);
  return out;
}

inline std::vector<MultiDegree> enumerate_diophantine(std::initializer_list<std::int64_t> weights,
                                                      std::int64_t target,
                                                      std::initializer_list<std::int64_t> lower_bounds) {
  return enumerate_diophantine(std::span<const std::int64_t>(weights.begin(), weights.size()), target,
                               std::span<const std::int64_t>(lower_bounds.begin(), lower_bounds.size()));
}

// Number of square-free divisors greater than 1 of x and of x - 1 together.
// x - 1 = 0 contributes nothing.
inline std::int64_t square_free_divisor_count(std::int64_t x) {
  detail::require(x >= 1, "square_free_divisor_count: argument must be positive");
  std::int64_t count = 0;
  for (std::int64_t y : {x, x - 1}) {
    if (y < 1) continue;
    for (std::int64_t i : divisors(y)) {
      if (i > 1 && moebius(i) != 0) ++count;
    }
  }
  return count;
}

// Explicit lower bound for m(x) over all-positive x.  n(.) is applied to the
// smallest coordinate, and the second term uses integer parts of x/2:
//   (multinomial(x) - n(min x) * |x| * [|x|/2]! / prod [x_k/2]!) / (|x| (|x| - 1)).
inline ExactRat claim2_lower_bound(const GeneratorSystem& gs, const MultiDegree& x) {
  detail::require_same_length(gs.size(), x.size(), "claim2_lower_bound");
  detail::require(x.all_positive(), "claim2_lower_bound: all coordinates must be positive");
  const std::int64_t total = x.total();
  detail::require(total >= 2, "claim2_lower_bound: needs at least two letters");

  const std::int64_t smallest = *std::min_element(x.coords().begin(), x.coords().end());
  ExactInt halves = factorial(total / 2);
  for (std::int64_t v : x.coords()) halves /= factorial(v / 2);

  ExactInt numerator = multinomial(x.coords()) -
                       ExactInt(square_free_divisor_count(smallest)) * total * halves;
  return ExactRat(numerator, ExactInt(total) * (total - 1));
}

}  // namespace linkrank

#endif  // LINKRANK_LIEDIM_HPP
