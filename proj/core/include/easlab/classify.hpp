// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "easlab/eas.hpp"

namespace easlab {

struct EnumerationFilter {
  bool ceds = false;
  bool dual_ceds = false;
  bool nondegenerate = false;
};

// Associative tables on {0..n-1} in lexicographic order of their cells.
std::vector<Magma> associative_tables(std::size_t n);

// Calls `visit` for every EAS on {0..n-1} passing the filter, in
// lexicographic order of (arrow, tri).
void for_each_eas(std::size_t n, const EnumerationFilter& filter,
                  const std::function<void(const FiniteEAS&)>& visit);
// Same set and order; work is split over arrow tables across `jobs` threads.
std::vector<FiniteEAS> enumerate_eas(std::size_t n, const EnumerationFilter& filter = {},
                                     std::size_t jobs = 1);

// Least (arrow, tri) pair over all relabelings.
FiniteEAS canonical_form(const FiniteEAS& e);

struct CensusEntry {
  FiniteEAS representative;
  bool is_ceds = false;
  bool is_dual_ceds = false;
  bool is_nondegenerate = false;
  std::size_t orbit_size = 0;
  // Constructor that produces the class, or "unnamed".
  std::string description;
  // Case label from the reference cardinality-two table, empty otherwise.
  std::string label;
};

// Largest carrier classified without `allow_large`.
inline constexpr std::size_t kCensusSoftLimit = 3;

// Entries sorted by representative. Throws InputError above the soft limit
// unless `allow_large` is set.
std::vector<CensusEntry> classify_up_to_iso(std::size_t n, const EnumerationFilter& filter = {},
                                            std::size_t jobs = 1, bool allow_large = false);

// "EAS(Ω)", "EAS(Ω,*)", "EAS(Ω,*,π)", "EAS'(Ω,*)" or "unnamed", tested in
// that order directly on the tables.
std::string describe(const FiniteEAS& e);

// The thirteen cardinality-two reference classes, with X = 0 and Y = 1.
struct LabeledTable {
  std::string label;
  FiniteEAS eas;
};
const std::vector<LabeledTable>& cardinality_two_table();
// Label of the class of a 2-element EAS, or empty.
std::string cardinality_two_label(const FiniteEAS& e);

}  // namespace easlab
