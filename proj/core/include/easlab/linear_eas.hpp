// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "easlab/eas.hpp"
#include "easlab/matrix.hpp"
#include "easlab/report.hpp"

namespace easlab {

// A linear map on the tensor square of an n-dimensional space. Columns are
// indexed by the input tensor index i*n + j, rows by the output index.
struct LinearEAS {
  std::size_t dim = 0;
  RatMatrix phi;

  LinearEAS() = default;
  LinearEAS(std::size_t n, RatMatrix m);
  friend bool operator==(const LinearEAS&, const LinearEAS&) = default;
};

// Exact comparisons of the two sides of each identity on the tensor cube.
bool braid_check(const LinearEAS& l);
bool lceds_check(const LinearEAS& l);
bool dual_lceds_check(const LinearEAS& l);

// Same checks as reports; the witness is the first differing (row, column)
// of the tensor-cube matrices.
AxiomReport check_leas(const LinearEAS& l);
AxiomReport check_lceds(const LinearEAS& l);
AxiomReport check_dual_lceds(const LinearEAS& l);

LinearEAS linearize(const FiniteEAS& e);
// The dual map on the dual space, written in the dual basis.
LinearEAS transpose_dual(const LinearEAS& l);
bool is_nondegenerate(const LinearEAS& l);
// Throws HypothesisError when phi is singular.
LinearEAS inverse(const LinearEAS& l);

// The map written in the basis whose vectors are the columns of `basis`.
LinearEAS in_basis(const LinearEAS& l, const RatMatrix& basis);
// (P (x) P) phi1 = phi2 (P (x) P) with P invertible.
bool check_leas_iso(const LinearEAS& l1, const LinearEAS& l2, const RatMatrix& p);

bool is_special_vector(const LinearEAS& l, const RatVector& v, const Rational& eigenvalue);
bool is_left_unit(const LinearEAS& l, const RatVector& a);
// `f` is a linear form given by its coordinates in the dual basis.
bool is_left_counit(const LinearEAS& l, const RatVector& f);
std::vector<RatVector> left_units(const LinearEAS& l);
std::vector<RatVector> left_counits(const LinearEAS& l);

// Projective solution set of phi(v (x) v) = eigenvalue * v (x) v in dimension 2.
struct SpecialVectorSolution {
  enum class Kind { empty, lines, plane };
  Rational eigenvalue;
  Kind kind = Kind::empty;
  std::vector<RatVector> lines;  // leading entry 1, sorted
};
struct SpecialLines {
  SpecialVectorSolution one;
  SpecialVectorSolution zero;
};
SpecialVectorSolution special_lines_dim2(const LinearEAS& l, const Rational& eigenvalue);
SpecialLines special_lines_dim2(const LinearEAS& l);

// Fixed family of eighteen 2-dimensional maps, indices 1..18. Only index 2
// uses the parameter.
LinearEAS m_matrix(int index, const Rational& parameter = Rational(1));
inline constexpr int kMMatrixCount = 18;

// Isomorphism invariants, used as evidence when comparing maps.
struct LeasInvariants {
  std::size_t rank = 0;
  Rational trace;
  std::size_t fixed_space_dim = 0;  // kernel of phi - Id
  std::size_t unit_dim = 0;
  std::size_t counit_dim = 0;
  // Only filled in dimension 2; -1 encodes the whole plane.
  std::optional<int> eigenvalue_one_lines;
  std::optional<int> eigenvalue_zero_lines;
  friend bool operator==(const LeasInvariants&, const LeasInvariants&) = default;
};
LeasInvariants invariants(const LinearEAS& l);

}  // namespace easlab
