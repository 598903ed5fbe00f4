// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "easlab/eas.hpp"

namespace easlab {

// a->b = b, a|>b = a.
FiniteEAS make_trivial(std::size_t n);
// a->b = a*b, a|>b = pi(a). `mul` must be associative and `pi` an
// idempotent endomorphism of it. The overload without pi uses the identity.
FiniteEAS make_semigroup_eas(const Magma& mul, const std::vector<Element>& pi);
FiniteEAS make_semigroup_eas(const Magma& mul);
// a->b = b, a|>b = the unique c with c*b = a. `mul` must be associative with
// unique right division.
FiniteEAS make_right_division(const Magma& mul);

// Carrier pairs (a,a') are indexed a*|E2| + a'.
FiniteEAS direct_product(const FiniteEAS& e1, const FiniteEAS& e2);

// Twisted product of a semigroup (mul) with a CEDS `e2`:
//   (a,a')->(b,b') = (a*b, a'->b'),   (a,a')|>(b,b') = (a<b', a'|>b'),
// where act[a*|e2| + b'] = a<b'. All hypotheses are verified; a violation
// throws HypothesisError naming the law and its witness.
FiniteEAS semidirect_product(const Magma& mul, const FiniteEAS& e2, const std::vector<Element>& act);

// Throws HypothesisError if the partition is not compatible with both operations.
FiniteEAS quotient(const FiniteEAS& e, const Congruence& c);
bool is_compatible(const FiniteEAS& e, const Congruence& c);

bool is_sub_eas(const FiniteEAS& e, const std::vector<Element>& subset);
// Restriction to a closed subset, relabeled in increasing order.
FiniteEAS sub_eas(const FiniteEAS& e, const std::vector<Element>& subset);

}  // namespace easlab
