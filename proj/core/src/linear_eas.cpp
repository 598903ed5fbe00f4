// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/linear_eas.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "easlab/error.hpp"

namespace easlab {

namespace {

std::optional<std::vector<std::size_t>> first_difference(const RatMatrix& a, const RatMatrix& b) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != b(r, c)) return std::vector<std::size_t>{r, c};
    }
  }
  return std::nullopt;
}

LawVerdict verdict(std::string law, const RatMatrix& lhs, const RatMatrix& rhs) {
  LawVerdict v{std::move(law), true, {}};
  if (auto w = first_difference(lhs, rhs)) {
    v.holds = false;
    v.witness = std::move(*w);
  }
  return v;
}

struct CubeFactors {
  RatMatrix phi_left;   // phi (x) Id
  RatMatrix phi_right;  // Id (x) phi
  RatMatrix swap_left;  // tau (x) Id
  RatMatrix swap_right; // Id (x) tau
};

CubeFactors cube_factors(const LinearEAS& l) {
  const RatMatrix id = RatMatrix::identity(l.dim);
  const RatMatrix t = swap_matrix(l.dim);
  return {kron(l.phi, id), kron(id, l.phi), kron(t, id), kron(id, t)};
}

LawVerdict braid_verdict(const CubeFactors& f) {
  return verdict("braid", f.phi_right * f.phi_left * f.phi_right, f.phi_left * f.swap_right * f.phi_left);
}

LawVerdict commutation_verdict(const CubeFactors& f) {
  return verdict("commutation", f.phi_right * f.swap_right * f.swap_left * f.phi_left,
                 f.swap_left * f.phi_left * f.phi_right * f.swap_right);
}

LawVerdict dual_commutation_verdict(const CubeFactors& f) {
  return verdict("dual commutation", f.phi_left * f.swap_left * f.swap_right * f.phi_right,
                 f.swap_right * f.phi_right * f.phi_left * f.swap_left);
}

void require_dim(const LinearEAS& l, std::size_t n, const char* what) {
  if (l.dim != n) throw InputError(std::string(what) + ": dimension mismatch");
}

// Every common projective zero of the forms lies on the first nonzero one,
// so its (at most two) roots are the only candidates.
std::vector<RatVector> roots_of_binary_quadratic(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<RatVector> roots;
  if (a.is_zero()) {
    roots.push_back({Rational(1), Rational(0)});
    if (!b.is_zero()) roots.push_back({-c / b, Rational(1)});
    return roots;
  }
  const Rational disc = b * b - Rational(4) * a * c;
  Rational root;
  if (disc.sign() < 0 || !disc.exact_sqrt(root)) return roots;
  roots.push_back({(-b + root) / (Rational(2) * a), Rational(1)});
  if (!root.is_zero()) roots.push_back({(-b - root) / (Rational(2) * a), Rational(1)});
  return roots;
}

}  // namespace

LinearEAS::LinearEAS(std::size_t n, RatMatrix m) : dim(n), phi(std::move(m)) {
  if (n == 0) throw InputError("dimension must be positive");
  if (phi.rows() != n * n || phi.cols() != n * n) throw InputError("phi must be n^2 x n^2");
}

bool braid_check(const LinearEAS& l) { return braid_verdict(cube_factors(l)).holds; }
bool lceds_check(const LinearEAS& l) {
  const auto f = cube_factors(l);
  return braid_verdict(f).holds && commutation_verdict(f).holds;
}
bool dual_lceds_check(const LinearEAS& l) {
  const auto f = cube_factors(l);
  return braid_verdict(f).holds && dual_commutation_verdict(f).holds;
}

AxiomReport check_leas(const LinearEAS& l) { return {"leas", {braid_verdict(cube_factors(l))}}; }
AxiomReport check_lceds(const LinearEAS& l) {
  const auto f = cube_factors(l);
  return {"lceds", {braid_verdict(f), commutation_verdict(f)}};
}
AxiomReport check_dual_lceds(const LinearEAS& l) {
  const auto f = cube_factors(l);
  return {"dual-lceds", {braid_verdict(f), dual_commutation_verdict(f)}};
}

LinearEAS linearize(const FiniteEAS& e) {
  const std::size_t n = e.size();
  RatMatrix m(n * n, n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) m(e.arrow(a, b) * n + e.tri(a, b), a * n + b) = 1;
  }
  return LinearEAS(n, std::move(m));
}

LinearEAS transpose_dual(const LinearEAS& l) { return LinearEAS(l.dim, transpose(l.phi)); }

bool is_nondegenerate(const LinearEAS& l) { return rank(l.phi) == l.phi.rows(); }

LinearEAS inverse(const LinearEAS& l) {
  auto inv = invert(l.phi);
  if (!inv) throw HypothesisError("nondegeneracy", "phi is singular");
  return LinearEAS(l.dim, std::move(*inv));
}

LinearEAS in_basis(const LinearEAS& l, const RatMatrix& basis) {
  if (basis.rows() != l.dim || basis.cols() != l.dim) throw InputError("basis must be n x n");
  const RatMatrix bb = kron(basis, basis);
  auto inv = invert(bb);
  if (!inv) throw InputError("basis vectors are linearly dependent");
  return LinearEAS(l.dim, *inv * l.phi * bb);
}

bool check_leas_iso(const LinearEAS& l1, const LinearEAS& l2, const RatMatrix& p) {
  if (l1.dim != l2.dim || p.rows() != l1.dim || p.cols() != l1.dim) return false;
  if (rank(p) != l1.dim) return false;
  const RatMatrix pp = kron(p, p);
  return pp * l1.phi == l2.phi * pp;
}

bool is_special_vector(const LinearEAS& l, const RatVector& v, const Rational& eigenvalue) {
  require_dim(l, v.size(), "is_special_vector");
  const RatVector vv = kron(v, v);
  const RatVector image = l.phi * vv;
  for (std::size_t i = 0; i < vv.size(); ++i) {
    if (image[i] != eigenvalue * vv[i]) return false;
  }
  return true;
}

bool is_left_unit(const LinearEAS& l, const RatVector& a) {
  require_dim(l, a.size(), "is_left_unit");
  for (std::size_t j = 0; j < l.dim; ++j) {
    const RatVector e = unit_vector(l.dim, j);
    if (l.phi * kron(a, e) != kron(e, a)) return false;
  }
  return true;
}

bool is_left_counit(const LinearEAS& l, const RatVector& f) {
  require_dim(l, f.size(), "is_left_counit");
  const RatMatrix id = RatMatrix::identity(l.dim);
  const RatMatrix row = RatMatrix::row(f);
  return kron(row, id) * l.phi == kron(id, row);
}

std::vector<RatVector> left_units(const LinearEAS& l) {
  const std::size_t n = l.dim, n2 = n * n;
  // Rows: (j, output index); columns: coordinates of a.
  RatMatrix system(n * n2, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t row = 0; row < n2; ++row) {
      for (std::size_t i = 0; i < n; ++i) system(j * n2 + row, i) = l.phi(row, i * n + j);
    }
    for (std::size_t q = 0; q < n; ++q) system(j * n2 + j * n + q, q) -= Rational(1);
  }
  return kernel_basis(system);
}

std::vector<RatVector> left_counits(const LinearEAS& l) {
  const std::size_t n = l.dim, n2 = n * n;
  // Entry (r, c) of (f (x) Id) phi - Id (x) f.
  RatMatrix system(n * n2, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n2; ++c) {
      for (std::size_t i = 0; i < n; ++i) system(r * n2 + c, i) = l.phi(i * n + r, c);
      if (c / n == r) system(r * n2 + c, c % n) -= Rational(1);
    }
  }
  return kernel_basis(system);
}

SpecialVectorSolution special_lines_dim2(const LinearEAS& l, const Rational& eigenvalue) {
  if (l.dim != 2) throw InputError("special_lines_dim2 needs dimension 2");
  // Component r of phi(v (x) v) - eigenvalue v (x) v for v = (p, q) is
  // A p^2 + B pq + C q^2.
  SpecialVectorSolution out;
  out.eigenvalue = eigenvalue;
  auto coeff = [&](std::size_t r, std::size_t col) {
    const Rational own = (r == col) ? eigenvalue : Rational(0);
    return l.phi(r, col) - own;
  };
  std::optional<std::size_t> first;
  for (std::size_t r = 0; r < 4; ++r) {
    const bool zero = coeff(r, 0).is_zero() && (coeff(r, 1) + coeff(r, 2)).is_zero() && coeff(r, 3).is_zero();
    if (!zero) {
      first = r;
      break;
    }
  }
  if (!first) {
    out.kind = SpecialVectorSolution::Kind::plane;
    return out;
  }
  const std::size_t r = *first;
  for (RatVector v : roots_of_binary_quadratic(coeff(r, 0), coeff(r, 1) + coeff(r, 2), coeff(r, 3))) {
    if (is_special_vector(l, v, eigenvalue)) out.lines.push_back(normalize_leading(std::move(v)));
  }
  std::sort(out.lines.begin(), out.lines.end());
  out.lines.erase(std::unique(out.lines.begin(), out.lines.end()), out.lines.end());
  out.kind = out.lines.empty() ? SpecialVectorSolution::Kind::empty : SpecialVectorSolution::Kind::lines;
  return out;
}

SpecialLines special_lines_dim2(const LinearEAS& l) {
  return {special_lines_dim2(l, Rational(1)), special_lines_dim2(l, Rational(0))};
}

LinearEAS m_matrix(int index, const Rational& parameter) {
  using Table = std::initializer_list<std::initializer_list<long>>;
  auto make = [](Table rows) { return LinearEAS(2, RatMatrix::from_rows(rows)); };
  switch (index) {
    case 1: return make({{0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    case 2: {
      LinearEAS l = make({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
      l.phi(1, 2) = parameter;
      return l;
    }
    case 3: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    case 4: return make({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    case 5: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
    case 6: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
    case 7: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}});
    case 8: return make({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
    case 9: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    case 10: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}});
    case 11: return make({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}});
    case 12: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, -1, 0}});
    case 13: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}});
    case 14: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    case 15: return make({{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}});
    case 16: return make({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
    case 17: return make({{1, 0, 1, 0}, {0, 0, -1, 0}, {0, 1, -1, 0}, {0, 0, 2, 1}});
    case 18: return make({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    default: throw InputError("matrix index must be in 1..18");
  }
}

LeasInvariants invariants(const LinearEAS& l) {
  LeasInvariants inv;
  inv.rank = rank(l.phi);
  for (std::size_t i = 0; i < l.phi.rows(); ++i) inv.trace += l.phi(i, i);
  inv.fixed_space_dim = kernel_basis(l.phi - RatMatrix::identity(l.phi.rows())).size();
  inv.unit_dim = left_units(l).size();
  inv.counit_dim = left_counits(l).size();
  if (l.dim == 2) {
    auto count = [](const SpecialVectorSolution& s) {
      return s.kind == SpecialVectorSolution::Kind::plane ? -1 : static_cast<int>(s.lines.size());
    };
    const SpecialLines s = special_lines_dim2(l);
    inv.eigenvalue_one_lines = count(s.one);
    inv.eigenvalue_zero_lines = count(s.zero);
  }
  return inv;
}

}  // namespace easlab
