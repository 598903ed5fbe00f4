// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "easlab/classify.hpp"
#include "easlab/constructions.hpp"
#include "easlab/group.hpp"
#include "easlab/matrix.hpp"
#include "easlab/structure.hpp"

namespace easlab::testing {

inline constexpr std::uint64_t kSeed = 0x5eed2026ULL;
inline constexpr int kPropertyCases = 10000;

inline FiniteEAS case_table(const std::string& label) {
  for (const auto& row : cardinality_two_table()) {
    if (row.label == label) return row.eas;
  }
  throw std::invalid_argument("unknown case " + label);
}

inline RatVector vec(std::initializer_list<long> xs) { return RatVector(xs.begin(), xs.end()); }

// Matrix whose columns are the given vectors.
inline RatMatrix columns(const std::vector<RatVector>& cols) { return RatMatrix::from_columns(cols, cols.front().size()); }

// Z/3 twisted by Z/2 acting through negation, trivial set part.
inline std::vector<Element> negation_action() {
  std::vector<Element> act(2 * 3);
  for (Element a = 0; a < 3; ++a) {
    act[0 * 3 + a] = a;
    act[1 * 3 + a] = (3 - a) % 3;
  }
  return act;
}

inline FiniteEAS six_element_ceds() {
  return assemble_ceds(GroupTable::cyclic(3), GroupTable::cyclic(2), negation_action(), 1);
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed = kSeed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }

  std::vector<Element> table(std::size_t n) {
    std::vector<Element> t(n * n);
    for (auto& x : t) x = static_cast<Element>(below(n));
    return t;
  }
  FiniteEAS any_tables(std::size_t n) { return FiniteEAS(n, table(n), table(n)); }

  std::vector<Element> permutation(std::size_t n) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  Rational small_rational(long bound = 4) {
    const long num = static_cast<long>(below(2 * bound + 1)) - bound;
    const long den = static_cast<long>(below(3)) + 1;
    return Rational(num, den);
  }
  RatMatrix matrix(std::size_t rows, std::size_t cols, long bound = 4) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = coin() ? Rational(0) : small_rational(bound);
    }
    return m;
  }
  RatVector vector(std::size_t n, long bound = 4) {
    RatVector v(n);
    for (auto& x : v) x = small_rational(bound);
    return v;
  }

  template <class T>
  const T& pick(const std::vector<T>& xs) { return xs[below(xs.size())]; }

 private:
  std::mt19937_64 rng_;
};

// Nondegenerate EAS of every size up to 3, plus larger products and the
// six-element twisted example.
inline std::vector<FiniteEAS> nondegenerate_pool() {
  std::vector<FiniteEAS> pool;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& e : enumerate_eas(n, EnumerationFilter{false, false, true})) pool.push_back(std::move(e));
  }
  pool.push_back(six_element_ceds());
  const FiniteEAS f4 = case_table("F4"), h2 = case_table("H2"), f3 = case_table("F3");
  pool.push_back(direct_product(f4, h2));
  pool.push_back(direct_product(h2, f3));
  pool.push_back(direct_product(make_right_division(GroupTable::cyclic(3).table()), f4));
  pool.push_back(make_semigroup_eas(GroupTable::symmetric3().table()));
  pool.push_back(make_right_division(GroupTable::symmetric3().table()));
  return pool;
}

}  // namespace easlab::testing
