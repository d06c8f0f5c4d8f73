/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Minimal tour of the library: link ranks, finiteness, framing and the
// oracle.

#include <iostream>

#include "linkrank/linkrank.hpp"

int main() {
  using namespace linkrank;

  const LinkProblem borromean_like(6, {3, 3, 3});
  const RankReport rep = link_rank(borromean_like);
  std::cout << "rank of links S^3 u S^3 u S^3 in S^6: " << rep.total_rank << "\n";
  std::cout << "  Brunnian part: " << *rep.brunnian_rank << "\n";
  for (const auto& [subset, part] : *rep.subset_decomposition) {
    std::cout << "  components {";
    for (std::size_t i = 0; i < subset.size(); ++i) std::cout << (i ? "," : "") << subset[i] + 1;
    std::cout << "}: " << part << "\n";
  }

  const LinkProblem two(8, {5, 5});
  const LinkProblem three(8, {5, 5, 5});
  std::cout << "S^5 u S^5 in S^8 infinite: " << std::boolalpha << link_is_infinite(two) << "\n";
  std::cout << "S^5 u S^5 u S^5 in S^8 infinite: " << link_is_infinite(three) << "\n";

  const FramedLinkProblem fp(8, {{5, 3}, {5, 3}});
  std::cout << "framed S^5 x D^3 u S^5 x D^3 in S^8: rank " << framed_rank(fp).total_rank << "\n";

  const GeneratorSystem gs{1, 1};
  const MultiDegree x{2, 1};
  std::cout << "dim L_(2,1), odd generators: formula " << lie_component_dim(gs, x) << ", oracle "
            << oracle::component_dim_bruteforce(gs, x) << "\n";
  return 0;
}
