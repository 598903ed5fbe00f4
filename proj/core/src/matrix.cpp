// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/matrix.hpp"

#include <algorithm>

#include "easlab/error.hpp"

namespace easlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InputError(std::string("dimension mismatch: ") + what);
}

}  // namespace

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == c, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(r, j) = rows[r][j];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> v;
  for (const auto& r : rows) {
    RatVector row;
    for (long x : r) row.emplace_back(x);
    v.push_back(std::move(row));
  }
  return from_rows(v);
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t height) {
  RatMatrix m(height, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == height, "column length");
    for (std::size_t r = 0; r < height; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RatMatrix RatMatrix::column(const RatVector& v) { return from_columns({v}, v.size()); }

RatMatrix RatMatrix::row(const RatVector& v) { return from_rows(std::vector<RatVector>{v}); }

RatVector RatMatrix::row_vector(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column_vector(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  require(a.cols_ == b.rows_, "matrix product");
  RatMatrix c(a.rows_, b.cols_);
  // i-k-j order so zero entries of `a` skip a whole row update; the
  // structure matrices handled here are mostly zero.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        if (aik.is_one()) {
          c(i, j) += bkj;
        } else {
          c(i, j) += aik * bkj;
        }
      }
    }
  }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  require(a.cols_ == v.size(), "matrix-vector product");
  RatVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          if (b(p, q).is_zero()) continue;
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return k;
}

RatVector kron(const RatVector& a, const RatVector& b) {
  RatVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

RatMatrix swap_matrix(std::size_t n) {
  TensorIndex idx(n);
  RatMatrix s(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s(idx.encode(j, i), idx.encode(i, j)) = 1;
  }
  return s;
}

RatMatrix rref(const RatMatrix& input, std::vector<std::size_t>* pivots) {
  RatMatrix m = input;
  if (pivots) pivots->clear();
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    // Smallest-height pivot keeps coefficient growth down.
    std::size_t best = m.rows();
    mpz_class best_height;
    for (std::size_t r = lead_row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      mpz_class h = m(r, col).height();
      if (best == m.rows() || h < best_height) {
        best = r;
        best_height = h;
      }
    }
    if (best == m.rows()) continue;
    if (best != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(lead_row, c));
    }
    const Rational inv = m(lead_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(lead_row, c).is_zero()) m(lead_row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
      }
    }
    if (pivots) pivots->push_back(col);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> raw;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    raw.push_back(std::move(v));
  }
  return span_basis(raw, m.cols());
}

std::optional<RatMatrix> invert(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("dimension mismatch: inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots;
  const RatMatrix red = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  }
  return inv;
}

std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  RatMatrix m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    require(vectors[r].size() == dim, "vector length");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  }
  std::vector<std::size_t> pivots;
  const RatMatrix red = rref(m, &pivots);
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(red.row_vector(r));
  return out;
}

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t dim) {
  return span_basis(a, dim) == span_basis(b, dim);
}

bool in_span(const RatVector& v, const std::vector<RatVector>& basis) {
  if (basis.empty()) return is_zero(v);
  std::vector<RatVector> ext = basis;
  ext.push_back(v);
  return span_basis(ext, v.size()).size() == span_basis(basis, v.size()).size();
}

bool projectively_equal(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  return normalize_leading(a) == normalize_leading(b);
}

RatVector normalize_leading(RatVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == v.end()) return v;
  const Rational inv = it->inverse();
  for (auto& x : v) x *= inv;
  return v;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

}  // namespace easlab
