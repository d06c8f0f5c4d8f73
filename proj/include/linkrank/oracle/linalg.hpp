/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Exact rank computations over Q on integer matrices.

#ifndef LINKRANK_ORACLE_LINALG_HPP
#define LINKRANK_ORACLE_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "linkrank/arith.hpp"
#include "linkrank/error.hpp"

namespace linkrank::oracle {

using DenseMatrix = std::vector<std::vector<ExactInt>>;

// Fraction-free Gaussian elimination (Bareiss).  Every intermediate entry
// is a minor of the input, so all divisions are exact.
inline std::size_t bareiss_rank(DenseMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  for (const auto& row : a) linkrank::detail::require(row.size() == cols, "bareiss_rank: ragged matrix");

  ExactInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const ExactInt& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const ExactInt f = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        ExactInt v = p * a[i][j] - f * a[rank][j];
        ExactInt q;
        ExactInt rem;
        boost::multiprecision::divide_qr(v, prev, q, rem);
        linkrank::detail::ensure(rem == 0, "bareiss_rank: inexact division");
        a[i][j] = std::move(q);
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Sparse integer vector, entries sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, ExactInt>>;

namespace detail {

inline void normalize_content(SparseVector& v) {
  if (v.empty()) return;
  ExactInt g = 0;
  for (const auto& [i, c] : v) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  if (v.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [i, c] : v) c /= g;
  }
}

// a * v - b * row, merged.
inline SparseVector combine(const ExactInt& a, const SparseVector& v, const ExactInt& b, const SparseVector& row) {
  SparseVector out;
  out.reserve(v.size() + row.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < v.size() || j < row.size()) {
    if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || row[j].first < v[i].first) {
      out.emplace_back(row[j].first, -(b * row[j].second));
      ++j;
    } else {
      ExactInt c = a * v[i].second - b * row[j].second;
      if (c != 0) out.emplace_back(v[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

// Row-echelon basis grown one vector at a time, fraction-free with content
// normalisation.  insert() reports whether the vector was independent of
// those already present.
class EchelonBasis {
 public:
  bool insert(SparseVector v) {
    reduce(v);
    if (v.empty()) return false;
    detail::normalize_content(v);
    const std::uint32_t pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(SparseVector v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(SparseVector& v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      const SparseVector& row = it->second;
      const ExactInt a = row.front().second;
      const ExactInt b = v[pos].second;
      const ExactInt g = boost::multiprecision::gcd(a, b);
      v = detail::combine(a / g, v, b / g, row);
      detail::normalize_content(v);
    }
  }

  std::map<std::uint32_t, SparseVector> rows_;
};

}  // namespace linkrank::oracle

#endif  // LINKRANK_ORACLE_LINALG_HPP
