/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LINKRANK_ERROR_HPP
#define LINKRANK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace linkrank {

// Caller supplied an argument outside the operation's domain.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value that must hold by construction did not (non-integral dimension,
// disagreeing cross-checks).  Always a bug, never bad user input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The brute-force oracle was asked for more than its budget allows.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw invalid_input(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw internal_error(message);
}

}  // namespace detail
}  // namespace linkrank

#endif  // LINKRANK_ERROR_HPP
