// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/group.hpp"

#include <algorithm>
#include <array>

#include "easlab/error.hpp"

namespace easlab {

GroupTable::GroupTable(Magma table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (auto w = table_.associativity_failure()) throw HypothesisError("group", "not associative", *w);
  Element e = static_cast<Element>(n);
  for (Element a = 0; a < n && e == n; ++a) {
    bool unit = true;
    for (Element b = 0; b < n && unit; ++b) unit = table_(a, b) == b && table_(b, a) == b;
    if (unit) e = a;
  }
  if (e == n) throw HypothesisError("group", "no identity element");
  identity_ = e;
  inverse_.assign(n, static_cast<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (table_(a, b) == e && table_(b, a) == e) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == n) throw HypothesisError("group", "element has no inverse", {a});
  }
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) cells[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return GroupTable(Magma(n, std::move(cells)));
}

GroupTable GroupTable::symmetric3() {
  std::vector<std::array<Element, 3>> perms;
  std::array<Element, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::array<Element, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      cells[a * n + b] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable(Magma(n, std::move(cells)));
}

GroupTable GroupTable::klein() { return product(cyclic(2), cyclic(2)); }

GroupTable GroupTable::product(const GroupTable& g, const GroupTable& h) {
  const std::size_t ng = g.size(), nh = h.size(), n = ng * nh;
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < ng; ++a) {
    for (Element a2 = 0; a2 < nh; ++a2) {
      for (Element b = 0; b < ng; ++b) {
        for (Element b2 = 0; b2 < nh; ++b2) {
          cells[(a * nh + a2) * n + b * nh + b2] = g.mul(a, b) * static_cast<Element>(nh) + h.mul(a2, b2);
        }
      }
    }
  }
  return GroupTable(Magma(n, std::move(cells)));
}

bool GroupTable::is_subgroup(const std::vector<Element>& subset) const {
  if (subset.empty()) return false;
  std::vector<bool> in(size(), false);
  for (Element a : subset) {
    if (a >= size()) throw InputError("subset element out of range");
    in[a] = true;
  }
  // Finite: closure under products of a nonempty subset suffices.
  for (Element a : subset) {
    for (Element b : subset) {
      if (!in[mul(a, b)]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> GroupTable::subgroups() const {
  const std::size_t n = size();
  if (n > 20) throw InputError("subgroup enumeration is limited to order 20");
  std::vector<std::vector<Element>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Element> s;
    for (Element a = 0; a < n; ++a) {
      if (mask >> a & 1) s.push_back(a);
    }
    if (is_subgroup(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace easlab
