// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "easlab/group.hpp"
#include "easlab/linear_eas.hpp"
#include "easlab/matrix.hpp"
#include "easlab/report.hpp"

namespace easlab {

// Structure constants in matrix form:
//   mult    n x n^2, column i*n + j is the product e_i e_j
//   comult  n^2 x n, column i is the coproduct of e_i
//   unit    coordinates of the unit
//   counit  values of the counit on the basis
//   antipode n x n, column i is the image of e_i
struct Bialgebra {
  std::size_t dim = 0;
  RatMatrix mult;
  RatMatrix comult;
  std::optional<RatVector> unit;
  std::optional<RatVector> counit;
  std::optional<RatMatrix> antipode;

  Bialgebra() = default;
  Bialgebra(std::size_t n, RatMatrix m, RatMatrix d);
  friend bool operator==(const Bialgebra&, const Bialgebra&) = default;

  // Product of basis vectors and coproduct of a basis vector as tables.
  RatVector product(std::size_t i, std::size_t j) const;
  RatMatrix coproduct(std::size_t i) const;  // entry (j, k) is the e_j (x) e_k coefficient
};

// Which sides the unit and counit are required to work on.
enum class UnitSides { two_sided, left_only };

// Associativity, coassociativity, compatibility, and the unit/counit laws
// for whichever of unit/counit is present.
AxiomReport check_bialgebra(const Bialgebra& b, UnitSides sides = UnitSides::two_sided);
// The bialgebra laws plus both antipode laws; unit, counit and antipode
// must be present.
AxiomReport check_hopf(const Bialgebra& b);

Bialgebra opposite_comult(const Bialgebra& b);

// a (x) b -> sum a(1) b (x) a(2)
LinearEAS leas_from_bialgebra(const Bialgebra& b);
// a (x) b -> sum a(1) b (x) p(a(2)) for an idempotent bialgebra endomorphism p.
LinearEAS leas_from_bialgebra_proj(const Bialgebra& b, const RatMatrix& projection);
// a (x) b -> sum f(a(1)) b (x) a(2) for a form with (f (x) f) comult = f.
LinearEAS leas_from_form(const RatMatrix& comult, const RatVector& form);
// a (x) b -> sum b(1) (x) S(b(2)) a; needs a verified Hopf algebra.
LinearEAS leas_prime_from_hopf(const Bialgebra& b);

// Group algebra with basis G and the algebra of functions with basis delta_g.
Bialgebra group_bialgebra(const GroupTable& g);
Bialgebra dual_group_bialgebra(const GroupTable& g);

// Units characterized through the coproduct. `applies` is false when the
// stored unit (counit) is only one-sided, in which case no basis is claimed.
struct CharacterizedSpace {
  bool applies = false;
  std::vector<RatVector> basis;
};
// Elements a with comult(a) = 1 (x) a; requires a unit.
CharacterizedSpace bialgebra_left_units(const Bialgebra& b);
// Forms l with l o mult = counit (x) l; requires a counit.
CharacterizedSpace bialgebra_left_counits(const Bialgebra& b);
// Forms l with (l (x) Id) comult = l(.) 1; requires a unit.
std::vector<RatVector> right_integrals(const Bialgebra& b);

// Comult b -> phi(b (x) a), mult (Id (x) eps) phi. Throws HypothesisError
// unless a is a left unit, eps a left counit and eps(a) = 1; the result has
// a as unit and eps as counit.
Bialgebra reconstruct_bialgebra(const LinearEAS& l, const RatVector& a, const RatVector& eps);

// Indicator sum of a subset of the basis; subgroup_sum verifies the subset.
RatVector subset_sum(std::size_t size, const std::vector<Element>& subset);
RatVector subgroup_sum(const GroupTable& g, const std::vector<Element>& subgroup);

// Vector on the carrier of assemble_ceds(group1, group2, action, set_size)
// with coefficient weights[a3] at (a1, a2, a3) for a1 in h1 and a2 in h2.
// Throws HypothesisError unless h1, h2 are subgroups and h2 > h1 lies in h1.
RatVector twisted_subgroup_vector(const GroupTable& group1, const GroupTable& group2,
                                  const std::vector<Element>& action, std::size_t set_size,
                                  const std::vector<Element>& h1, const std::vector<Element>& h2,
                                  const RatVector& weights);

}  // namespace easlab
