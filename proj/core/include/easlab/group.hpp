// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "easlab/eas.hpp"

namespace easlab {

// Finite group given by its Cayley table. Construction verifies the group
// laws and derives the identity and inverses.
class GroupTable {
 public:
  explicit GroupTable(Magma table);

  static GroupTable trivial();
  static GroupTable cyclic(std::size_t n);
  // Permutations of {0,1,2} in lexicographic order, (s t)(x) = s(t(x)).
  static GroupTable symmetric3();
  static GroupTable klein();
  // Pairs (g,h) indexed g*|H| + h.
  static GroupTable product(const GroupTable& g, const GroupTable& h);

  std::size_t size() const noexcept { return table_.size(); }
  Element mul(Element a, Element b) const { return table_(a, b); }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<Element>& inverse_table() const noexcept { return inverse_; }
  const Magma& table() const noexcept { return table_; }

  bool is_abelian() const { return table_.is_commutative(); }
  GroupTable opposite() const { return GroupTable(table_.opposite()); }
  bool is_subgroup(const std::vector<Element>& subset) const;
  // Every subgroup as a sorted element list, ordered lexicographically.
  std::vector<std::vector<Element>> subgroups() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.table_ == b.table_; }

 private:
  Magma table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

}  // namespace easlab
