// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "easlab/axioms.hpp"
#include "easlab/classify.hpp"
#include "easlab/constructions.hpp"
#include "easlab/error.hpp"
#include "easlab/linear_eas.hpp"
#include "support/fixtures.hpp"
#include "support/reference_tables.hpp"

namespace easlab {
namespace {

using testing::case_table;
using testing::columns;
using testing::Generator;
using testing::kPropertyCases;
using testing::vec;

const RatVector X = vec({1, 0}), Y = vec({0, 1});

// Column (a,b) holds e_{a->b} (x) e_{a|>b}.
RatMatrix linearization_oracle(const FiniteEAS& e) {
  const std::size_t n = e.size();
  RatMatrix m(n * n, n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const RatVector image = kron(unit_vector(n, e.arrow(a, b)), unit_vector(n, e.tri(a, b)));
      for (std::size_t r = 0; r < n * n; ++r) m(r, a * n + b) = image[r];
    }
  }
  return m;
}

std::vector<LinearEAS> braid_valid_pool() {
  std::vector<LinearEAS> pool;
  for (int i = 1; i <= kMMatrixCount; ++i) pool.push_back(m_matrix(i));
  pool.push_back(m_matrix(2, Rational(-3, 2)));
  for (const auto& row : cardinality_two_table()) pool.push_back(linearize(row.eas));
  return pool;
}

TEST(LinearEas, ValidatesShape) {
  EXPECT_THROW(LinearEAS(2, RatMatrix(3, 4)), Error);
  EXPECT_THROW(LinearEAS(0, RatMatrix(0, 0)), Error);
}

TEST(BraidCheck, AllEighteenMatrices) {
  std::set<int> lceds, dual;
  for (int i = 1; i <= kMMatrixCount; ++i) {
    EXPECT_TRUE(braid_check(m_matrix(i))) << i;
    EXPECT_TRUE(check_leas(m_matrix(i)).holds()) << i;
    if (lceds_check(m_matrix(i))) lceds.insert(i);
    if (dual_lceds_check(m_matrix(i))) dual.insert(i);
  }
  EXPECT_EQ(lceds, (std::set<int>{1, 2, 3, 4, 5, 9, 10, 13, 14, 16, 17, 18}));
  EXPECT_EQ(dual, (std::set<int>{1, 2, 3, 4, 5, 7, 8, 9, 11, 13, 14, 15, 16, 17, 18}));
  EXPECT_THROW(m_matrix(0), Error);
  EXPECT_THROW(m_matrix(19), Error);
}

TEST(BraidCheck, ParameterFamily) {
  for (long a : {0L, 1L, -1L, 7L}) {
    const LinearEAS m = m_matrix(2, Rational(a));
    EXPECT_TRUE(braid_check(m) && lceds_check(m) && dual_lceds_check(m)) << a;
  }
}

TEST(BraidCheck, ZeroMapPassesEverything) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const LinearEAS zero(n, RatMatrix(n * n, n * n));
    EXPECT_TRUE(braid_check(zero) && lceds_check(zero) && dual_lceds_check(zero));
  }
}

TEST(BraidCheck, ReportsWitnessEntry) {
  const LinearEAS bad(2, RatMatrix::identity(4) * Rational(2));
  const AxiomReport r = check_leas(bad);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.laws[0].law, "braid");
  EXPECT_EQ(r.laws[0].witness.size(), 2u);
}

TEST(Linearize, MatchesOracleAndTableCases) {
  for (const auto& row : cardinality_two_table()) EXPECT_EQ(linearize(row.eas).phi, linearization_oracle(row.eas));
  EXPECT_EQ(linearize(testing::six_element_ceds()).phi, linearization_oracle(testing::six_element_ceds()));
  EXPECT_EQ(linearize(case_table("F3")), m_matrix(18));
  EXPECT_EQ(in_basis(linearize(case_table("C3")), columns({Y, X})), m_matrix(16));
  EXPECT_EQ(linearize(make_trivial(1)).phi, RatMatrix::identity(1));
}

TEST(TransposeDual, PaperPairs) {
  EXPECT_EQ(transpose_dual(m_matrix(4)), m_matrix(5));
  for (int i : {3, 6, 13, 18}) EXPECT_EQ(transpose_dual(m_matrix(i)), m_matrix(i)) << i;
}

TEST(Inverse, CommutesWithLinearization) {
  for (const char* label : {"F3", "F4", "H2"}) {
    const FiniteEAS e = case_table(label);
    EXPECT_EQ(inverse(linearize(e)), linearize(inverse_eas(e))) << label;
  }
  EXPECT_FALSE(is_nondegenerate(m_matrix(1)));
  EXPECT_THROW(inverse(m_matrix(1)), HypothesisError);
}

TEST(UnitsCounits, TableRows) {
  EXPECT_TRUE(same_span(left_units(m_matrix(18)), {X, Y}, 2));
  EXPECT_TRUE(same_span(left_counits(m_matrix(18)), {X, Y}, 2));
  EXPECT_TRUE(same_span(left_units(m_matrix(16)), {X}, 2));
  EXPECT_TRUE(same_span(left_counits(m_matrix(16)), {vec({1, 1})}, 2));
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(left_units(LinearEAS(n, RatMatrix(n * n, n * n))).empty());
  EXPECT_TRUE(is_left_unit(m_matrix(16), X));
  EXPECT_FALSE(is_left_unit(m_matrix(16), Y));
  EXPECT_TRUE(is_left_counit(m_matrix(16), vec({2, 2})));
}

TEST(SpecialLines, TableRows) {
  const SpecialLines m11 = special_lines_dim2(m_matrix(11));
  ASSERT_EQ(m11.one.kind, SpecialVectorSolution::Kind::lines);
  EXPECT_EQ(m11.one.lines, (std::vector<RatVector>{X, vec({1, 1})}));
  EXPECT_EQ(m11.zero.lines, (std::vector<RatVector>{Y}));
  const SpecialLines m1 = special_lines_dim2(m_matrix(1));
  EXPECT_EQ(m1.one.kind, SpecialVectorSolution::Kind::empty);
  EXPECT_TRUE(same_span(m1.zero.lines, {X, Y}, 2));
  EXPECT_EQ(m1.zero.lines.size(), 2u);
  EXPECT_EQ(special_lines_dim2(m_matrix(18)).one.kind, SpecialVectorSolution::Kind::plane);
  EXPECT_THROW(special_lines_dim2(linearize(testing::six_element_ceds())), Error);
}

TEST(SpecialLines, ReferenceTables) {
  auto run = [](const std::vector<testing::ExpectedRow>& rows) {
    for (const auto& r : rows) {
      const testing::RowCheck c = testing::check_row(r);
      EXPECT_TRUE(c.eigen_one) << r.name;
      EXPECT_TRUE(c.eigen_zero) << r.name;
      EXPECT_TRUE(c.units) << r.name;
      EXPECT_TRUE(c.counits) << r.name;
    }
  };
  run(testing::cardinality_two_expectations());
  run(testing::m_family_expectations(Rational(1)));
  run(testing::m_family_expectations(Rational(-2)));
}

TEST(Isomorphism, Witnesses) {
  EXPECT_TRUE(check_leas_iso(m_matrix(4), linearize(case_table("A2")), columns({X, vec({1, -1})})));
  EXPECT_TRUE(check_leas_iso(m_matrix(15), m_matrix(11), columns({vec({1, 1}), X})));
  for (int i = 1; i <= kMMatrixCount; ++i) EXPECT_TRUE(check_leas_iso(m_matrix(i), m_matrix(i), RatMatrix::identity(2)));
  EXPECT_FALSE(check_leas_iso(m_matrix(1), m_matrix(1), RatMatrix(2, 2)));
  EXPECT_FALSE(check_leas_iso(m_matrix(16), m_matrix(18), RatMatrix::identity(2)));
}

TEST(Invariants, SummariseTheMatrix) {
  const LeasInvariants m18 = invariants(m_matrix(18));
  EXPECT_EQ(m18.rank, 4u);
  EXPECT_EQ(m18.unit_dim, 2u);
  EXPECT_EQ(m18.counit_dim, 2u);
  EXPECT_EQ(m18.eigenvalue_one_lines, -1);
  const LeasInvariants m11 = invariants(m_matrix(11));
  EXPECT_EQ(m11.eigenvalue_one_lines, 2);
  EXPECT_EQ(m11.eigenvalue_zero_lines, 1);
  EXPECT_FALSE(invariants(linearize(testing::six_element_ceds())).eigenvalue_one_lines.has_value());
}

TEST(LinearEasProperty, LinearizationEquivalence) {
  Generator gen(testing::kSeed + 7);
  for (int i = 0; i < kPropertyCases; ++i) {
    const FiniteEAS e = gen.any_tables(2);
    const LinearEAS l = linearize(e);
    ASSERT_EQ(braid_check(l), check_eas(e).holds());
    ASSERT_EQ(lceds_check(l), check_ceds(e).holds());
    ASSERT_EQ(dual_lceds_check(l), check_dual_ceds(e).holds());
  }
}

TEST(LinearEasProperty, TransposeDuality) {
  Generator gen(testing::kSeed + 8);
  const auto pool = braid_valid_pool();
  for (int i = 0; i < kPropertyCases; ++i) {
    const LinearEAS l = gen.coin() ? gen.pick(pool) : LinearEAS(2, gen.matrix(4, 4, 1));
    const LinearEAS t = transpose_dual(l);
    ASSERT_EQ(transpose_dual(t), l);
    ASSERT_EQ(braid_check(t), braid_check(l));
    ASSERT_EQ(lceds_check(t), dual_lceds_check(l));
  }
}

TEST(LinearEasProperty, EigenvaluesOfSpecialVectors) {
  Generator gen(testing::kSeed + 9);
  const auto pool = braid_valid_pool();
  for (const auto& l : pool) {
    const SpecialLines s = special_lines_dim2(l);
    for (const auto& v : s.one.lines) ASSERT_TRUE(is_special_vector(l, v, Rational(1)));
    for (const auto& v : s.zero.lines) ASSERT_TRUE(is_special_vector(l, v, Rational(0)));
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    const LinearEAS& l = gen.pick(pool);
    RatVector v = gen.vector(2, 3);
    if (is_zero(v)) v = X;
    Rational lambda = gen.small_rational(5);
    if (lambda.is_zero() || lambda.is_one()) lambda = Rational(2);
    ASSERT_FALSE(is_special_vector(l, v, lambda));
  }
}

TEST(LinearEasProperty, LeftUnitSpacesAreClosed) {
  Generator gen(testing::kSeed + 10);
  const auto pool = braid_valid_pool();
  for (int i = 0; i < kPropertyCases; ++i) {
    const LinearEAS& l = gen.pick(pool);
    const auto units = left_units(l), counits = left_counits(l);
    RatVector u(2), f(2);
    for (const auto& b : units) {
      const Rational c = gen.small_rational();
      for (std::size_t k = 0; k < 2; ++k) u[k] += c * b[k];
    }
    for (const auto& b : counits) {
      const Rational c = gen.small_rational();
      for (std::size_t k = 0; k < 2; ++k) f[k] += c * b[k];
    }
    ASSERT_TRUE(is_left_unit(l, u));
    ASSERT_TRUE(is_left_counit(l, f));
  }
}

TEST(LinearEasProperty, InverseOfNondegenerateLinearizations) {
  for (const auto& e : testing::nondegenerate_pool()) {
    const LinearEAS inv = inverse(linearize(e));
    EXPECT_TRUE(braid_check(inv));
    EXPECT_EQ(inv, linearize(inverse_eas(e)));
  }
}

}  // namespace
}  // namespace easlab
