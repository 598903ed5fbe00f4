// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "easlab/eas.hpp"
#include "easlab/group.hpp"

namespace easlab {

// left[a][b] = a->b and right[a][b] = b|>a, i.e. the left translations by a
// and the right tri-translations by a.
struct TranslationSystem {
  std::size_t size = 0;
  std::vector<std::vector<Element>> left;
  std::vector<std::vector<Element>> right;
  std::vector<bool> left_bijective;
  std::vector<bool> right_bijective;
};

TranslationSystem translations(const FiniteEAS& e);
// Every left translation is a bijection.
bool is_strongly_nondegenerate(const FiniteEAS& e);
// The left translations are closed under composition, contain the identity
// and are closed under inversion.
bool left_translations_form_group(const FiniteEAS& e);

// Elements whose left translation, respectively right tri-translation, is
// the identity. Both require a nondegenerate, strongly nondegenerate input.
std::vector<Element> omega_arrow(const FiniteEAS& e);
std::vector<Element> omega_tri(const FiniteEAS& e);

// Decomposition of a nondegenerate EAS with a->b = b as
// EAS(set) x EAS'(group). The witness maps the pair (s, g), indexed
// s*|group| + g, to the input element.
struct TrivialArrowDecomposition {
  std::vector<Element> set_elements;
  std::vector<Element> group_elements;
  GroupTable group;
  Morphism witness;
  std::size_t set_size() const { return set_elements.size(); }
};
TrivialArrowDecomposition trivial_arrow_decompose(const FiniteEAS& e);

enum class DecompositionForm { ceds, dual_ceds };

// Components of a finite nondegenerate CEDS (or dual CEDS):
//   ceds form:  carrier (a1, a2, a3) indexed (a1*n2 + a2)*n3 + a3 with
//     (a1,a2,a3)->(b1,b2,b3) = (a1*b1, b2, b3)
//     (a1,a2,a3)|>(b1,b2,b3) = (b2 > a1, a2 b2^-1, a3)
//   and act(g, a) = g > a a left action of group2 on group1.
//   dual form:  carrier (a2, a1, a3) indexed (a2*n1 + a1)*n3 + a3 with
//     (a2,a1,a3)->(b2,b1,b3) = (a2 b2, b1 < a2^-1, b3)
//     (a2,a1,a3)|>(b2,b1,b3) = (a2, a1*(b1^-1 < a2^-1), a3)
//   and act(g, a) = a < g a right action of group2 on group1.
struct DecompositionReport {
  DecompositionForm form = DecompositionForm::ceds;
  GroupTable group1 = GroupTable::trivial();
  GroupTable group2 = GroupTable::trivial();
  std::vector<Element> action;  // action[g * |group1| + a]
  std::size_t set_size = 1;
  FiniteEAS rebuilt = FiniteEAS(1, {0}, {0});
  Morphism theta;  // rebuilt -> input, verified isomorphism
  Element beta0 = 0;
  std::vector<Element> omega_arrow;
  std::vector<Element> omega_tri;
  // Verified hypotheses in pipeline order.
  std::vector<std::pair<std::string, bool>> stages;

  Element act(Element g, Element a) const { return action[g * group1.size() + a]; }
};

// Throws HypothesisError naming the failing stage.
DecompositionReport ceds_decompose(const FiniteEAS& e);
DecompositionReport decompose_dual(const FiniteEAS& e);

// Builders for the two product forms described above.
FiniteEAS assemble_ceds(const GroupTable& group1, const GroupTable& group2,
                        const std::vector<Element>& left_action, std::size_t set_size);
FiniteEAS assemble_dual_ceds(const GroupTable& group1, const GroupTable& group2,
                             const std::vector<Element>& right_action, std::size_t set_size);
FiniteEAS rebuild(const DecompositionReport& report);

}  // namespace easlab
