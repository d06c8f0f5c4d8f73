/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Free associative superalgebra on graded letters, with exact rational
// coefficients.  The free Lie superalgebra is realised inside it as the
// span of iterated supercommutators of letters.

#ifndef LINKRANK_ORACLE_SUPERALGEBRA_HPP
#define LINKRANK_ORACLE_SUPERALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkrank/arith.hpp"
#include "linkrank/error.hpp"

namespace linkrank::oracle {

struct SuperLetter {
  std::size_t index = 0;
  std::int64_t degree = 1;

  int parity() const { return static_cast<int>(degree % 2); }
  auto operator<=>(const SuperLetter&) const = default;
};

using SuperWord = std::vector<SuperLetter>;

using linkrank::to_string;

inline std::int64_t word_degree(const SuperWord& w) {
  std::int64_t d = 0;
  for (const SuperLetter& c : w) d += c.degree;
  return d;
}

inline std::string to_string(const SuperWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const SuperLetter& c : w) out += "P" + std::to_string(c.index + 1);
  return out;
}

// Finitely supported map word -> coefficient; zero coefficients are never
// stored.  Callers keep polynomials homogeneous.
class SuperPolynomial {
 public:
  using Terms = std::map<SuperWord, ExactRat>;

  SuperPolynomial() = default;

  static SuperPolynomial letter(SuperLetter c) {
    SuperPolynomial p;
    p.terms_.emplace(SuperWord{c}, ExactRat(1));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ExactRat coefficient(const SuperWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ExactRat(0) : it->second;
  }

  void add_term(const SuperWord& w, const ExactRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Parity of the (common) degree of the support; 0 for the zero polynomial.
  int parity() const {
    if (terms_.empty()) return 0;
    return static_cast<int>(word_degree(terms_.begin()->first) % 2);
  }

  SuperPolynomial& operator+=(const SuperPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  SuperPolynomial& operator-=(const SuperPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  SuperPolynomial& operator*=(const ExactRat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(SuperPolynomial a, const ExactRat& s) { return a *= s; }
  friend SuperPolynomial operator*(const ExactRat& s, SuperPolynomial a) { return a *= s; }

  // Concatenation product.
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    SuperPolynomial out;
    for (const auto& [u, cu] : a.terms_) {
      for (const auto& [v, cv] : b.terms_) {
        SuperWord w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.add_term(w, cu * cv);
      }
    }
    return out;
  }

  bool operator==(const SuperPolynomial&) const = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      const bool negative = c < 0;
      if (!out.empty()) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      const ExactRat mag = negative ? ExactRat(-c) : c;
      if (mag != 1) out += linkrank::to_string(mag) + "*";
      out += to_string(w);
    }
    return out;
  }

 private:
  Terms terms_;
};

// [u, v] = uv - (-1)^{|u||v|} vu.
inline SuperPolynomial super_bracket(const SuperPolynomial& u, const SuperPolynomial& v) {
  SuperPolynomial out = u * v;
  if (u.parity() * v.parity() == 1) {
    out += v * u;
  } else {
    out -= v * u;
  }
  return out;
}

// [[...[w_1, w_2], ...], w_n].
inline SuperPolynomial left_normed_bracket(const SuperWord& w) {
  linkrank::detail::require(!w.empty(), "left_normed_bracket: empty word");
  SuperPolynomial acc = SuperPolynomial::letter(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = super_bracket(acc, SuperPolynomial::letter(w[i]));
  }
  return acc;
}

}  // namespace linkrank::oracle

#endif  // LINKRANK_ORACLE_SUPERALGEBRA_HPP
