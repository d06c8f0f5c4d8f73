/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Regeneration of the two reference tables: Brunnian ranks of two-component
// links S^p, S^{p+k} in S^{p+l+k}, and small two-generator multiplicities.

#ifndef LINKRANK_TABLES_HPP
#define LINKRANK_TABLES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "linkrank/arith.hpp"
#include "linkrank/fcs.hpp"
#include "linkrank/liedim.hpp"
#include "linkrank/ranks.hpp"

namespace linkrank {

// A column or row label: an exact value, or "value and above" evaluated at
// a representative.
struct TableIndex {
  std::int64_t value;
  bool at_least = false;
  std::int64_t representative = 0;  // equals value unless at_least

  std::string label() const { return (at_least ? ">=" : "") + std::to_string(value); }
};

struct Table2Cell {
  std::int64_t p;
  TableIndex l;
  TableIndex k;
  ExactInt rank;
};

inline ExactInt table2_value(std::int64_t p, std::int64_t l, std::int64_t k) {
  return brunnian_rank(LinkProblem(p + l + k, {p, p + k})).rank;
}

// Columns l = 3..p+1, then "l >= p+2".
inline std::vector<TableIndex> table2_columns(std::int64_t p) {
  std::vector<TableIndex> cols;
  for (std::int64_t l = 3; l <= p + 1; ++l) cols.push_back({l, false, l});
  cols.push_back({p + 2, true, p + 2});
  return cols;
}

inline std::vector<TableIndex> table2_rows(std::int64_t k_representative = 3) {
  return {{0, false, 0}, {1, false, 1}, {2, false, 2}, {3, true, k_representative}};
}

inline constexpr std::int64_t kTable2MaxP = 5;

// Ordered by p, then l, then k.
inline std::vector<Table2Cell> table2() {
  std::vector<Table2Cell> out;
  for (std::int64_t p = 1; p <= kTable2MaxP; ++p) {
    for (const TableIndex& l : table2_columns(p)) {
      for (const TableIndex& k : table2_rows()) {
        out.push_back({p, l, k, table2_value(p, l.representative, k.representative)});
      }
    }
  }
  return out;
}

struct Table3Block {
  ParityPair parities;
  std::array<std::array<ExactInt, 5>, 5> values;  // values[y-1][x-1] = m(x, y)
};

inline std::int64_t representative_weight(Parity p) { return p == Parity::even ? 2 : 1; }

inline std::vector<Table3Block> table3() {
  const std::vector<ParityPair> classes = {
      {Parity::even, Parity::even}, {Parity::odd, Parity::even}, {Parity::odd, Parity::odd}};
  std::vector<Table3Block> out;
  for (const ParityPair& pp : classes) {
    DimensionTable dt(GeneratorSystem{representative_weight(pp.i), representative_weight(pp.j)});
    Table3Block block{pp, {}};
    for (std::int64_t y = 1; y <= 5; ++y) {
      for (std::int64_t x = 1; x <= 5; ++x) block.values[y - 1][x - 1] = dt.multiplicity(MultiDegree{x, y});
    }
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace linkrank

#endif  // LINKRANK_TABLES_HPP
