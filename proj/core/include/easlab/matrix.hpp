// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "easlab/rational.hpp"

namespace easlab {

using RatVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t height);
  static RatMatrix column(const RatVector& v);
  static RatMatrix row(const RatVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row_vector(std::size_t r) const;
  RatVector column_vector(std::size_t c) const;

  bool is_zero() const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Basis e_i (x) e_j of the tensor square lives at index i*n + j.
class TensorIndex {
 public:
  explicit TensorIndex(std::size_t n) : n_(n) {}
  std::size_t dim() const noexcept { return n_; }
  std::size_t encode(std::size_t i, std::size_t j) const noexcept { return i * n_ + j; }
  std::pair<std::size_t, std::size_t> decode(std::size_t k) const noexcept { return {k / n_, k % n_}; }

 private:
  std::size_t n_;
};

RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
RatVector kron(const RatVector& a, const RatVector& b);
RatMatrix transpose(const RatMatrix& m);
// Matrix of a (x) b -> b (x) a on the n^2-dimensional tensor square.
RatMatrix swap_matrix(std::size_t n);

// Reduced row echelon form; pivot columns are written to `pivots` if given.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RatMatrix& m);
// Canonical kernel basis: rows of the RREF of any kernel basis, so each
// vector has leading entry 1 and the list is sorted by leading position.
std::vector<RatVector> kernel_basis(const RatMatrix& m);
std::optional<RatMatrix> invert(const RatMatrix& m);

// Canonical basis (RREF rows) of the span of `vectors` in dimension `dim`.
std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors, std::size_t dim);
bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t dim);
bool in_span(const RatVector& v, const std::vector<RatVector>& basis);
// True when both vectors are nonzero multiples of each other.
bool projectively_equal(const RatVector& a, const RatVector& b);
// Scales a nonzero vector so that its first nonzero entry is 1.
RatVector normalize_leading(RatVector v);
bool is_zero(const RatVector& v);
RatVector unit_vector(std::size_t n, std::size_t i);

}  // namespace easlab
