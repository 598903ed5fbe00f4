// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "easlab/eas.hpp"
#include "easlab/report.hpp"

namespace easlab {

// Laws are named by their formula with -> for arrow, |> for tri, <- and <|
// for the left operations of an EDS.
AxiomReport check_eas(const FiniteEAS& e);
AxiomReport check_ceds(const FiniteEAS& e);
AxiomReport check_dual_ceds(const FiniteEAS& e);
AxiomReport check_eds(const FiniteEDS& d);

// Fast boolean forms used by enumeration; agree with the reports above.
bool satisfies_eas(std::size_t n, const Element* arrow, const Element* tri);
bool satisfies_ceds(std::size_t n, const Element* arrow, const Element* tri);
bool satisfies_dual_ceds(std::size_t n, const Element* arrow, const Element* tri);

// The same three properties stated as identities of maps on triples built
// from the pair map phi and the flip tau.
bool check_eas_via_pair_map(const FiniteEAS& e);
bool check_ceds_via_pair_map(const FiniteEAS& e);
bool check_dual_ceds_via_pair_map(const FiniteEAS& e);

// EDS with a<-b = b->a and a<|b = b|>a.
FiniteEDS commutative_eds(const FiniteEAS& e);
// (->, |>) of an EDS; throws HypothesisError if `d` is not an EDS.
FiniteEAS right_part(const FiniteEDS& d);

PairMap phi_map(const FiniteEAS& e);
bool is_nondegenerate(const FiniteEAS& e);

// Operations read off the inverse pair map; requires only nondegeneracy.
FiniteEAS inverse_operations(const FiniteEAS& e);
// As above, but also requires `e` to be an EAS.
FiniteEAS inverse_eas(const FiniteEAS& e);

}  // namespace easlab
