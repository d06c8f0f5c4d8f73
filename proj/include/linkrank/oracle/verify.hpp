/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Sweeps the oracle against the closed-form d and m over a box of generator
// systems and multidegrees.

#ifndef LINKRANK_ORACLE_VERIFY_HPP
#define LINKRANK_ORACLE_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "linkrank/arith.hpp"
#include "linkrank/error.hpp"
#include "linkrank/liedim.hpp"
#include "linkrank/oracle/bruteforce.hpp"

namespace linkrank::oracle {

struct VerifyOptions {
  std::int64_t min_r = 1;
  std::int64_t max_r = 2;
  std::int64_t max_degree = 2;
  std::int64_t max_letters = 5;
  std::int64_t budget = kDefaultLetterBudget;
  unsigned threads = 1;
};

struct VerifyInstance {
  std::vector<std::int64_t> weights;
  MultiDegree multidegree;
};

struct VerifyFailure {
  VerifyInstance instance;
  std::string quantity;  // "dim", "rank" or "kernel"
  ExactInt expected;
  ExactInt actual;
};

struct VerifyReport {
  std::size_t instances = 0;
  std::size_t dim_checks = 0;
  std::size_t map_checks = 0;
  std::vector<VerifyFailure> failures;

  bool all_pass() const { return failures.empty(); }

  std::string summary() const {
    if (all_pass()) return "all " + std::to_string(instances) + " instances pass";
    return std::to_string(failures.size()) + " failures across " + std::to_string(instances) + " instances";
  }
};

// Generator systems with r in [min_r, max_r] and degrees in [1, max_degree],
// each with every multidegree of 1..max_letters letters; ordered by r, then
// weights, then total, then coordinates.
inline std::vector<VerifyInstance> verify_instances(const VerifyOptions& o) {
  linkrank::detail::require(o.min_r >= 1 && o.max_r >= o.min_r, "verify: need 1 <= min_r <= max_r");
  linkrank::detail::require(o.max_degree >= 1, "verify: max_degree must be positive");
  linkrank::detail::require(o.max_letters >= 1, "verify: max_letters must be positive");
  std::vector<VerifyInstance> out;
  for (std::int64_t r = o.min_r; r <= o.max_r; ++r) {
    const auto n = static_cast<std::size_t>(r);
    const std::vector<std::int64_t> ones(n, 1);
    const std::vector<std::int64_t> zeros(n, 0);
    std::vector<std::int64_t> weights(n, 1);
    while (true) {
      for (std::int64_t total = 1; total <= o.max_letters; ++total) {
        for (MultiDegree& x : enumerate_diophantine(ones, total, zeros)) out.push_back({weights, std::move(x)});
      }
      std::size_t k = n;
      while (k > 0 && weights[k - 1] == o.max_degree) weights[--k] = 1;
      if (k == 0) break;
      ++weights[k - 1];
    }
  }
  return out;
}

namespace detail {

inline std::vector<VerifyFailure> verify_one(const VerifyInstance& inst, std::int64_t budget, bool& mapped) {
  std::vector<VerifyFailure> fails;
  const GeneratorSystem gs(inst.weights);
  const MultiDegree& x = inst.multidegree;
  const std::int64_t dim = component_dim_bruteforce(gs, x, budget);
  const ExactInt expected_dim = lie_component_dim(gs, x);
  if (expected_dim != dim) fails.push_back({inst, "dim", expected_dim, dim});

  mapped = x.all_positive() && x.total() >= 2;
  if (mapped) {
    const WhiteheadAnalysis w = whitehead_map_analysis(gs, x, budget);
    if (w.rank != w.target_dim) fails.push_back({inst, "rank", w.target_dim, w.rank});
    const ExactInt expected_kernel = multiplicity(gs, x);
    if (expected_kernel != w.kernel_dim) fails.push_back({inst, "kernel", expected_kernel, w.kernel_dim});
  }
  return fails;
}

}  // namespace detail

// Instances are split into contiguous blocks, one per thread, and the
// results merged in instance order, so the report does not depend on the
// thread count.
inline VerifyReport verify_range(const VerifyOptions& o) {
  const std::vector<VerifyInstance> all = verify_instances(o);
  std::vector<std::vector<VerifyFailure>> fails(all.size());
  std::vector<char> mapped(all.size(), 0);

  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(o.threads, all.size()));
  std::vector<std::exception_ptr> errors(threads);
  auto run_block = [&](std::size_t t) {
    const std::size_t begin = all.size() * t / threads;
    const std::size_t end = all.size() * (t + 1) / threads;
    try {
      for (std::size_t i = begin; i < end; ++i) {
        bool m = false;
        fails[i] = detail::verify_one(all[i], o.budget, m);
        mapped[i] = m ? 1 : 0;
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run_block, t);
    for (std::thread& th : pool) th.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerifyReport report;
  report.instances = all.size();
  report.dim_checks = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    report.map_checks += mapped[i] ? 1 : 0;
    for (VerifyFailure& f : fails[i]) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace linkrank::oracle

#endif  // LINKRANK_ORACLE_VERIFY_HPP
