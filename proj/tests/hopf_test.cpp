// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "easlab/axioms.hpp"
#include "easlab/classify.hpp"
#include "easlab/constructions.hpp"
#include "easlab/error.hpp"
#include "easlab/hopf.hpp"
#include "easlab/linear_eas.hpp"
#include "easlab/structure.hpp"
#include "support/fixtures.hpp"

namespace easlab {
namespace {

using testing::case_table;
using testing::columns;
using testing::vec;

std::vector<std::pair<const char*, GroupTable>> groups() {
  return {{"Z/1", GroupTable::trivial()},   {"Z/2", GroupTable::cyclic(2)}, {"Z/3", GroupTable::cyclic(3)},
          {"Z/4", GroupTable::cyclic(4)},   {"Klein", GroupTable::klein()}, {"S3", GroupTable::symmetric3()}};
}

RatVector ones(std::size_t n) { return RatVector(n, Rational(1)); }

Bialgebra one_dimensional() {
  Bialgebra b(1, RatMatrix::identity(1), RatMatrix::identity(1));
  b.unit = vec({1});
  b.counit = vec({1});
  b.antipode = RatMatrix::identity(1);
  return b;
}

TEST(Bialgebra, ValidatesShapes) {
  EXPECT_THROW(Bialgebra(2, RatMatrix(2, 3), RatMatrix(4, 2)), Error);
  EXPECT_THROW(Bialgebra(2, RatMatrix(2, 4), RatMatrix(4, 3)), Error);
}

TEST(CheckBialgebra, GroupAndFunctionAlgebrasOfZ2) {
  EXPECT_TRUE(check_bialgebra(group_bialgebra(GroupTable::cyclic(2))).holds());
  EXPECT_TRUE(check_bialgebra(dual_group_bialgebra(GroupTable::cyclic(2))).holds());
  EXPECT_TRUE(check_hopf(one_dimensional()).holds());
}

TEST(CheckBialgebra, PerturbedComultiplicationBreaksCompatibility) {
  Bialgebra b = group_bialgebra(GroupTable::cyclic(2));
  // Delta(x) = x (x) x + e (x) e is not multiplicative.
  b.comult(0 * 2 + 0, 1) = 1;
  const AxiomReport r = check_bialgebra(b);
  const LawVerdict* c = r.find("compatibility");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->holds);
  EXPECT_FALSE(c->witness.empty());
}

TEST(GroupAlgebra, StructureConstants) {
  for (const auto& [name, g] : groups()) {
    const Bialgebra kg = group_bialgebra(g);
    const std::size_t n = g.size();
    EXPECT_TRUE(check_hopf(kg).holds()) << name;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) EXPECT_EQ(kg.product(a, b), unit_vector(n, g.mul(a, b)));
      RatMatrix diag(n, n);
      diag(a, a) = 1;
      EXPECT_EQ(kg.coproduct(a), diag);
      EXPECT_EQ((*kg.antipode) * unit_vector(n, a), unit_vector(n, g.inverse(a)));
    }
    EXPECT_EQ(*kg.unit, unit_vector(n, g.identity()));
    EXPECT_EQ(*kg.counit, ones(n));
  }
}

TEST(FunctionAlgebra, StructureConstants) {
  for (const auto& [name, g] : groups()) {
    const Bialgebra f = dual_group_bialgebra(g);
    const std::size_t n = g.size();
    EXPECT_TRUE(check_hopf(f).holds()) << name;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        EXPECT_EQ(f.product(a, b), a == b ? unit_vector(n, a) : RatVector(n));
      }
      RatMatrix want(n, n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (g.mul(x, y) == a) want(x, y) = 1;
        }
      }
      EXPECT_EQ(f.coproduct(a), want) << name;
    }
    EXPECT_EQ(*f.unit, ones(n));
    EXPECT_EQ(*f.counit, unit_vector(n, g.identity()));
  }
}

TEST(FromBialgebra, GroupAlgebraGivesSemigroupStructure) {
  EXPECT_EQ(leas_from_bialgebra(group_bialgebra(GroupTable::cyclic(2))), linearize(case_table("H2")));
  EXPECT_EQ(leas_from_bialgebra(one_dimensional()).phi, RatMatrix::identity(1));
}

TEST(FromBialgebra, CounitTwistedProductGivesSwap) {
  // a.b = eps(a) b and Delta(a) = u (x) a with eps = x*, u = x.
  const std::size_t n = 2;
  RatMatrix mult(n, n * n), comult(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == 0) mult(b, a * n + b) = 1;
    }
    comult(0 * n + a, a) = 1;
  }
  EXPECT_EQ(leas_from_bialgebra(Bialgebra(n, mult, comult)).phi, swap_matrix(n));
}

TEST(FromBialgebra, ProjectionOntoTrivialSubgroup) {
  const RatMatrix to_identity = RatMatrix::from_rows({{1, 1}, {0, 0}});
  const LinearEAS l = leas_from_bialgebra_proj(group_bialgebra(GroupTable::cyclic(2)), to_identity);
  EXPECT_EQ(l, linearize(case_table("H1")));
  EXPECT_THROW(leas_from_bialgebra_proj(group_bialgebra(GroupTable::cyclic(2)), RatMatrix::from_rows({{0, 1}, {1, 1}})),
               HypothesisError);
}

TEST(FromForm, SetCoalgebraWithIndicator) {
  const RatMatrix diag = RatMatrix::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}});
  const LinearEAS l = leas_from_form(diag, vec({1, 0}));
  RatMatrix want(4, 4);
  for (std::size_t b = 0; b < 2; ++b) want(b * 2 + 0, 0 * 2 + b) = 1;
  EXPECT_EQ(l.phi, want);
  EXPECT_EQ(leas_from_form(diag, vec({1, 1})).phi, swap_matrix(2));
}

TEST(PrimeConstruction, OppositeGroupAlgebraGivesDivisionStructure) {
  EXPECT_EQ(leas_prime_from_hopf(group_bialgebra(GroupTable::cyclic(2).opposite())), linearize(case_table("F4")));
  const GroupTable s3 = GroupTable::symmetric3();
  EXPECT_EQ(leas_prime_from_hopf(group_bialgebra(s3.opposite())), linearize(make_right_division(s3.table())));
  EXPECT_EQ(leas_prime_from_hopf(one_dimensional()).phi, RatMatrix::identity(1));
  Bialgebra no_antipode = group_bialgebra(GroupTable::cyclic(2));
  no_antipode.antipode.reset();
  EXPECT_THROW(leas_prime_from_hopf(no_antipode), HypothesisError);
}

TEST(PrimeConstruction, InverseLawOnZ3) {
  const Bialgebra kg = group_bialgebra(GroupTable::cyclic(3));
  const RatMatrix phi = leas_prime_from_hopf(kg).phi, psi = leas_from_bialgebra(opposite_comult(kg)).phi;
  EXPECT_EQ(phi * psi, RatMatrix::identity(9));
  EXPECT_EQ(psi * phi, RatMatrix::identity(9));
}

TEST(UnitsOfGroupStructures, GroupAlgebra) {
  for (const auto& [name, g] : groups()) {
    const Bialgebra kg = group_bialgebra(g);
    const std::size_t n = g.size();
    const LinearEAS plain = leas_from_bialgebra(kg), prime = leas_prime_from_hopf(kg);
    EXPECT_TRUE(same_span(left_units(plain), {unit_vector(n, g.identity())}, n)) << name;
    EXPECT_TRUE(same_span(left_counits(plain), {ones(n)}, n)) << name;
    EXPECT_TRUE(same_span(left_units(prime), {ones(n)}, n)) << name;
    EXPECT_TRUE(same_span(left_counits(prime), {unit_vector(n, g.identity())}, n)) << name;
    const CharacterizedSpace u = bialgebra_left_units(kg), c = bialgebra_left_counits(kg);
    EXPECT_TRUE(u.applies && c.applies);
    EXPECT_TRUE(same_span(u.basis, left_units(plain), n)) << name;
    EXPECT_TRUE(same_span(c.basis, left_counits(plain), n)) << name;
  }
  const Bialgebra one = one_dimensional();
  EXPECT_TRUE(same_span(left_units(leas_from_bialgebra(one)), {vec({1})}, 1));
  EXPECT_TRUE(same_span(left_counits(leas_prime_from_hopf(one)), {vec({1})}, 1));
}

TEST(Reconstruct, SemigroupOfZ2UnderMultiplication) {
  const Bialgebra b = reconstruct_bialgebra(m_matrix(16), vec({1, 0}), vec({1, 1}));
  // x acts as 1 and y as 0 in (Z/2, x).
  EXPECT_EQ(b.product(0, 0), vec({1, 0}));
  EXPECT_EQ(b.product(0, 1), vec({0, 1}));
  EXPECT_EQ(b.product(1, 0), vec({0, 1}));
  EXPECT_EQ(b.product(1, 1), vec({0, 1}));
  EXPECT_EQ(b.coproduct(0), RatMatrix::from_rows({{1, 0}, {0, 0}}));
  EXPECT_EQ(b.coproduct(1), RatMatrix::from_rows({{0, 0}, {0, 1}}));
  EXPECT_EQ(leas_from_bialgebra(b), m_matrix(16));
}

TEST(Reconstruct, AdditiveZ2AfterBasisChange) {
  const Bialgebra b = reconstruct_bialgebra(m_matrix(17), vec({1, 0}), vec({1, 1}));
  const RatMatrix p = columns({vec({1, 0}), vec({-1, 2})});
  const RatMatrix pinv = *invert(p);
  const Bialgebra z2 = group_bialgebra(GroupTable::cyclic(2));
  EXPECT_EQ(pinv * b.mult * kron(p, p), z2.mult);
  EXPECT_EQ(*invert(kron(p, p)) * b.comult * p, z2.comult);
  EXPECT_TRUE(check_leas_iso(linearize(case_table("H2")), m_matrix(17), p));
}

TEST(Reconstruct, GroupAlgebraRoundTrip) {
  for (const auto& [name, g] : groups()) {
    if (g.size() > 4) continue;
    const Bialgebra kg = group_bialgebra(g);
    const Bialgebra b = reconstruct_bialgebra(leas_from_bialgebra(kg), *kg.unit, *kg.counit);
    EXPECT_EQ(b.mult, kg.mult) << name;
    EXPECT_EQ(b.comult, kg.comult) << name;
  }
}

TEST(Reconstruct, RejectsBadUnitsAndPairings) {
  EXPECT_THROW(reconstruct_bialgebra(m_matrix(16), vec({0, 1}), vec({1, 1})), HypothesisError);
  EXPECT_THROW(reconstruct_bialgebra(m_matrix(16), vec({1, 0}), vec({1, 0})), HypothesisError);
  EXPECT_THROW(reconstruct_bialgebra(m_matrix(16), vec({2, 0}), vec({1, 1})), HypothesisError);
  EXPECT_THROW(reconstruct_bialgebra(m_matrix(16), vec({1, 0, 0}), vec({1, 1})), InputError);
}

TEST(SubgroupSums, CyclicGroupOfOrderFour) {
  const GroupTable z4 = GroupTable::cyclic(4);
  const LinearEAS l = leas_from_bialgebra(group_bialgebra(z4));
  EXPECT_TRUE(is_special_vector(l, subgroup_sum(z4, {0, 2}), Rational(1)));
  EXPECT_FALSE(is_special_vector(l, subset_sum(4, {0, 1}), Rational(1)));
  EXPECT_THROW(subgroup_sum(z4, {0, 1}), HypothesisError);
  for (const auto& [name, g] : groups()) {
    const RatVector e = subgroup_sum(g, {g.identity()});
    EXPECT_TRUE(is_special_vector(leas_from_bialgebra(group_bialgebra(g)), e, Rational(1))) << name;
    EXPECT_TRUE(is_special_vector(leas_prime_from_hopf(group_bialgebra(g)), e, Rational(1))) << name;
  }
}

TEST(SubgroupSums, ExhaustiveCorrespondence) {
  for (const auto& g : {GroupTable::cyclic(4), GroupTable::klein(), GroupTable::cyclic(3)}) {
    const Bialgebra kg = group_bialgebra(g);
    const LinearEAS plain = leas_from_bialgebra(kg), prime = leas_prime_from_hopf(kg);
    for (std::size_t mask = 1; mask < (std::size_t{1} << g.size()); ++mask) {
      std::vector<Element> s;
      for (Element i = 0; i < g.size(); ++i) {
        if (mask >> i & 1) s.push_back(i);
      }
      const RatVector v = subset_sum(g.size(), s);
      EXPECT_EQ(is_special_vector(plain, v, Rational(1)), g.is_subgroup(s));
      EXPECT_EQ(is_special_vector(prime, v, Rational(1)), g.is_subgroup(s));
    }
  }
}

// Klein group with Z/2 exchanging two non-identity elements.
std::vector<Element> klein_swap_action(const GroupTable& k) {
  std::vector<Element> others;
  for (Element x = 0; x < 4; ++x) {
    if (x != k.identity()) others.push_back(x);
  }
  std::vector<Element> act(2 * 4);
  for (Element a = 0; a < 4; ++a) {
    act[0 * 4 + a] = a;
    act[1 * 4 + a] = a == others[0] ? others[1] : a == others[1] ? others[0] : a;
  }
  return act;
}

TEST(TwistedSubgroups, SpecialVectorsOfDecomposedStructures) {
  const GroupTable k = GroupTable::klein(), z2 = GroupTable::cyclic(2);
  const auto act = klein_swap_action(k);
  const FiniteEAS e = assemble_ceds(k, z2, act, 2);
  const LinearEAS l = linearize(e);
  std::size_t stable = 0;
  for (const auto& h1 : k.subgroups()) {
    for (const auto& h2 : z2.subgroups()) {
      bool preserved = true;
      for (Element g : h2)
        for (Element a : h1) preserved = preserved && std::find(h1.begin(), h1.end(), act[g * 4 + a]) != h1.end();
      if (!preserved) {
        EXPECT_THROW(twisted_subgroup_vector(k, z2, act, 2, h1, h2, vec({1, 1})), HypothesisError);
        // The same indicator sum is not special.
        RatVector v(16);
        for (Element a1 : h1)
          for (Element a2 : h2)
            for (std::size_t a3 = 0; a3 < 2; ++a3) v[(a1 * 2 + a2) * 2 + a3] = 1;
        EXPECT_FALSE(is_special_vector(l, v, Rational(1)));
        continue;
      }
      ++stable;
      for (const RatVector& w : {vec({1, 0}), vec({2, -3}), vec({1, 1})}) {
        EXPECT_TRUE(is_special_vector(l, twisted_subgroup_vector(k, z2, act, 2, h1, h2, w), Rational(1)));
      }
    }
  }
  EXPECT_GT(stable, 0u);

  // Left units: sums over the second group at the identity of the first.
  std::vector<RatVector> units, counits;
  for (std::size_t a3 = 0; a3 < 2; ++a3) {
    RatVector u(16), f(16);
    for (Element a2 = 0; a2 < 2; ++a2) u[(k.identity() * 2 + a2) * 2 + a3] = 1;
    for (Element a1 = 0; a1 < 4; ++a1) f[(a1 * 2 + z2.identity()) * 2 + a3] = 1;
    units.push_back(u);
    counits.push_back(f);
  }
  EXPECT_TRUE(same_span(left_units(l), units, 16));
  EXPECT_TRUE(same_span(left_counits(l), counits, 16));
}

TEST(HopfProperty, CommutativityCorrespondence) {
  for (const auto& [name, g] : groups()) {
    for (const Bialgebra& b : {group_bialgebra(g), dual_group_bialgebra(g)}) {
      const LinearEAS l = leas_from_bialgebra(b);
      bool commutative = true, cocommutative = true;
      const std::size_t n = b.dim;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) commutative = commutative && b.product(i, j) == b.product(j, i);
        cocommutative = cocommutative && b.coproduct(i) == transpose(b.coproduct(i));
      }
      EXPECT_EQ(lceds_check(l), commutative) << name;
      EXPECT_EQ(dual_lceds_check(l), cocommutative) << name;
    }
  }
}

TEST(HopfProperty, Intertwiners) {
  for (const auto& [name, g] : groups()) {
    const std::size_t n = g.size();
    const Bialgebra kg = group_bialgebra(g), f = dual_group_bialgebra(g), kop = group_bialgebra(g.opposite());
    EXPECT_TRUE(check_leas_iso(leas_prime_from_hopf(kg), leas_from_bialgebra(f), RatMatrix::identity(n))) << name;
    EXPECT_TRUE(check_leas_iso(leas_prime_from_hopf(f), leas_from_bialgebra(kop), RatMatrix::identity(n))) << name;
  }
}

TEST(HopfProperty, InverseLaw) {
  for (const auto& [name, g] : groups()) {
    for (const Bialgebra& b : {group_bialgebra(g), dual_group_bialgebra(g)}) {
      const std::size_t n = b.dim;
      const RatMatrix phi = leas_prime_from_hopf(b).phi, psi = leas_from_bialgebra(opposite_comult(b)).phi;
      EXPECT_EQ(phi * psi, RatMatrix::identity(n * n)) << name;
      EXPECT_EQ(psi * phi, RatMatrix::identity(n * n)) << name;
    }
  }
}

TEST(HopfProperty, RightIntegralsAreLeftCounits) {
  for (const auto& [name, g] : groups()) {
    const std::size_t n = g.size();
    const Bialgebra kg = group_bialgebra(g), f = dual_group_bialgebra(g);
    EXPECT_TRUE(same_span(right_integrals(kg), {unit_vector(n, g.identity())}, n)) << name;
    EXPECT_TRUE(same_span(right_integrals(f), {ones(n)}, n)) << name;
    for (const Bialgebra& b : {kg, f}) {
      const LinearEAS prime = leas_prime_from_hopf(b);
      for (const auto& v : right_integrals(b)) EXPECT_TRUE(is_left_counit(prime, v)) << name;
      EXPECT_TRUE(same_span(right_integrals(b), left_counits(prime), n)) << name;
    }
  }
}

GroupTable relabel_group(const GroupTable& g, const std::vector<Element>& p) {
  const std::size_t n = g.size();
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) cells[p[a] * n + p[b]] = p[g.mul(a, b)];
  }
  return GroupTable(Magma(n, std::move(cells)));
}

TEST(HopfProperty, RelabeledGroupAlgebras) {
  testing::Generator gen(testing::kSeed + 11);
  std::vector<GroupTable> pool;
  for (const auto& [name, g] : groups()) {
    if (g.size() <= 4) pool.push_back(g);
  }
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    const GroupTable& base = gen.pick(pool);
    const GroupTable g = relabel_group(base, gen.permutation(base.size()));
    const std::size_t n = g.size();
    const Bialgebra b = gen.coin() ? group_bialgebra(g) : dual_group_bialgebra(g);
    const LinearEAS plain = leas_from_bialgebra(b), prime = leas_prime_from_hopf(b);
    ASSERT_TRUE(braid_check(plain) && braid_check(prime));
    ASSERT_EQ(prime.phi * leas_from_bialgebra(opposite_comult(b)).phi, RatMatrix::identity(n * n));
    const Bialgebra r = reconstruct_bialgebra(plain, *b.unit, *b.counit);
    ASSERT_EQ(r.mult, b.mult);
    ASSERT_EQ(r.comult, b.comult);
    for (const auto& v : right_integrals(b)) ASSERT_TRUE(is_left_counit(prime, v));
  }
}

}  // namespace
}  // namespace easlab
