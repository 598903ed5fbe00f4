// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "easlab/eas.hpp"

namespace easlab {

// Transport of structure along a permutation: new(s(a), s(b)) = s(old(a, b)).
FiniteEAS relabel(const FiniteEAS& e, const std::vector<Element>& sigma);

// f preserves both operations (not necessarily bijective).
bool check_morphism(const Morphism& f, const FiniteEAS& source, const FiniteEAS& target);
bool is_isomorphism(const Morphism& f, const FiniteEAS& source, const FiniteEAS& target);

// First isomorphism in lexicographic order of the value sequence, found by
// backtracking with table-consistency pruning.
std::optional<Morphism> is_isomorphic(const FiniteEAS& e1, const FiniteEAS& e2);

}  // namespace easlab
