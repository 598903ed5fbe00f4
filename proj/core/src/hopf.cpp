// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/hopf.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "easlab/error.hpp"

namespace easlab {

namespace {

LawVerdict compare(std::string law, const RatMatrix& lhs, const RatMatrix& rhs) {
  LawVerdict v{std::move(law), true, {}};
  for (std::size_t r = 0; r < lhs.rows() && v.holds; ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      if (lhs(r, c) != rhs(r, c)) {
        v.holds = false;
        v.witness = {r, c};
        break;
      }
    }
  }
  return v;
}

LawVerdict missing(std::string law) { return {std::move(law), false, {}}; }

// Delta(e_i e_j) against Delta(e_i) Delta(e_j), entry by entry.
LawVerdict compatibility(const Bialgebra& b) {
  const std::size_t n = b.dim, n2 = n * n;
  const RatMatrix lhs = b.comult * b.mult;
  RatMatrix rhs(n2, n2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < n2; ++x) {
        const Rational& di = b.comult(x, i);
        if (di.is_zero()) continue;
        for (std::size_t y = 0; y < n2; ++y) {
          const Rational& dj = b.comult(y, j);
          if (dj.is_zero()) continue;
          const Rational w = di * dj;
          const std::size_t left = (x / n) * n + y / n, right = (x % n) * n + y % n;
          for (std::size_t p = 0; p < n; ++p) {
            const Rational& mp = b.mult(p, left);
            if (mp.is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q) {
              const Rational& mq = b.mult(q, right);
              if (!mq.is_zero()) rhs(p * n + q, i * n + j) += w * mp * mq;
            }
          }
        }
      }
    }
  }
  return compare("compatibility", lhs, rhs);
}

void require_laws(const AxiomReport& r, const std::vector<std::string>& laws, const char* stage) {
  for (const auto& law : laws) {
    const LawVerdict* v = r.find(law);
    if (!v || !v->holds) throw HypothesisError(stage, law + " fails", v ? v->witness : std::vector<std::size_t>{});
  }
}

const std::vector<std::string> kCoreLaws = {"associativity", "coassociativity", "compatibility"};

}  // namespace

Bialgebra::Bialgebra(std::size_t n, RatMatrix m, RatMatrix d) : dim(n), mult(std::move(m)), comult(std::move(d)) {
  if (n == 0) throw InputError("dimension must be positive");
  if (mult.rows() != n || mult.cols() != n * n) throw InputError("mult must be n x n^2");
  if (comult.rows() != n * n || comult.cols() != n) throw InputError("comult must be n^2 x n");
}

RatVector Bialgebra::product(std::size_t i, std::size_t j) const { return mult.column_vector(i * dim + j); }

RatMatrix Bialgebra::coproduct(std::size_t i) const {
  RatMatrix c(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) c(j, k) = comult(j * dim + k, i);
  }
  return c;
}

AxiomReport check_bialgebra(const Bialgebra& b, UnitSides sides) {
  const std::size_t n = b.dim;
  const RatMatrix id = RatMatrix::identity(n);
  AxiomReport r{"bialgebra", {}};
  r.laws.push_back(compare("associativity", b.mult * kron(b.mult, id), b.mult * kron(id, b.mult)));
  r.laws.push_back(compare("coassociativity", kron(b.comult, id) * b.comult, kron(id, b.comult) * b.comult));
  r.laws.push_back(compatibility(b));
  if (b.unit) {
    if (b.unit->size() != n) throw InputError("unit has wrong length");
    const RatMatrix u = RatMatrix::column(*b.unit);
    r.laws.push_back(compare("left unit", b.mult * kron(u, id), id));
    if (sides == UnitSides::two_sided) r.laws.push_back(compare("right unit", b.mult * kron(id, u), id));
    r.laws.push_back(compare("unit is group-like", b.comult * u, kron(u, u)));
  }
  if (b.counit) {
    if (b.counit->size() != n) throw InputError("counit has wrong length");
    const RatMatrix f = RatMatrix::row(*b.counit);
    r.laws.push_back(compare("left counit", kron(f, id) * b.comult, id));
    if (sides == UnitSides::two_sided) r.laws.push_back(compare("right counit", kron(id, f) * b.comult, id));
    r.laws.push_back(compare("counit is multiplicative", f * b.mult, kron(f, f)));
  }
  if (b.unit && b.counit) {
    r.laws.push_back(compare("counit of unit", RatMatrix::row(*b.counit) * RatMatrix::column(*b.unit),
                             RatMatrix::identity(1)));
  }
  return r;
}

AxiomReport check_hopf(const Bialgebra& b) {
  AxiomReport r = check_bialgebra(b);
  r.subject = "hopf";
  if (!b.unit) r.laws.push_back(missing("unit present"));
  if (!b.counit) r.laws.push_back(missing("counit present"));
  if (!b.antipode) r.laws.push_back(missing("antipode present"));
  if (!b.unit || !b.counit || !b.antipode) return r;
  if (b.antipode->rows() != b.dim || b.antipode->cols() != b.dim) throw InputError("antipode must be n x n");
  const RatMatrix id = RatMatrix::identity(b.dim);
  const RatMatrix target = RatMatrix::column(*b.unit) * RatMatrix::row(*b.counit);
  r.laws.push_back(compare("left antipode", b.mult * kron(*b.antipode, id) * b.comult, target));
  r.laws.push_back(compare("right antipode", b.mult * kron(id, *b.antipode) * b.comult, target));
  return r;
}

Bialgebra opposite_comult(const Bialgebra& b) {
  Bialgebra out = b;
  out.comult = swap_matrix(b.dim) * b.comult;
  if (b.antipode) {
    if (auto inv = invert(*b.antipode)) {
      out.antipode = std::move(*inv);
    } else {
      out.antipode.reset();
    }
  }
  return out;
}

LinearEAS leas_from_bialgebra(const Bialgebra& b) {
  require_laws(check_bialgebra(b), kCoreLaws, "bialgebra");
  const RatMatrix id = RatMatrix::identity(b.dim);
  return LinearEAS(b.dim, kron(b.mult, id) * kron(id, swap_matrix(b.dim)) * kron(b.comult, id));
}

LinearEAS leas_from_bialgebra_proj(const Bialgebra& b, const RatMatrix& p) {
  require_laws(check_bialgebra(b), kCoreLaws, "bialgebra");
  if (p.rows() != b.dim || p.cols() != b.dim) throw InputError("projection must be n x n");
  if (p * p != p) throw HypothesisError("projection", "p o p != p");
  if (p * b.mult != b.mult * kron(p, p)) throw HypothesisError("projection", "p is not multiplicative");
  if (b.comult * p != kron(p, p) * b.comult) throw HypothesisError("projection", "p is not comultiplicative");
  const RatMatrix id = RatMatrix::identity(b.dim);
  return LinearEAS(b.dim, kron(b.mult, p) * kron(id, swap_matrix(b.dim)) * kron(b.comult, id));
}

LinearEAS leas_from_form(const RatMatrix& comult, const RatVector& form) {
  const std::size_t n = form.size();
  if (n == 0 || comult.rows() != n * n || comult.cols() != n) throw InputError("comult must be n^2 x n");
  const RatMatrix id = RatMatrix::identity(n);
  const RatMatrix f = RatMatrix::row(form);
  if (kron(f, f) * comult != f) throw HypothesisError("form", "(f (x) f) o comult != f");
  if (kron(comult, id) * comult != kron(id, comult) * comult) throw HypothesisError("coalgebra", "coassociativity fails");
  // a (x) b -> f(a) b is the product of the auxiliary bialgebra.
  return LinearEAS(n, kron(kron(f, id), id) * kron(id, swap_matrix(n)) * kron(comult, id));
}

LinearEAS leas_prime_from_hopf(const Bialgebra& b) {
  const AxiomReport r = check_hopf(b);
  if (const LawVerdict* f = r.first_failure()) throw HypothesisError("hopf", f->law + " fails", f->witness);
  const RatMatrix id = RatMatrix::identity(b.dim);
  return LinearEAS(b.dim, kron(id, b.mult) * kron(kron(id, *b.antipode), id) * kron(b.comult, id) *
                              swap_matrix(b.dim));
}

Bialgebra group_bialgebra(const GroupTable& g) {
  const std::size_t n = g.size();
  RatMatrix m(n, n * n), d(n * n, n), s(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) m(g.mul(a, b), a * n + b) = 1;
    d(a * n + a, a) = 1;
    s(g.inverse(a), a) = 1;
  }
  Bialgebra out(n, std::move(m), std::move(d));
  out.unit = unit_vector(n, g.identity());
  out.counit = RatVector(n, Rational(1));
  out.antipode = std::move(s);
  return out;
}

Bialgebra dual_group_bialgebra(const GroupTable& g) {
  const std::size_t n = g.size();
  RatMatrix m(n, n * n), d(n * n, n), s(n, n);
  for (Element a = 0; a < n; ++a) {
    m(a, a * n + a) = 1;
    for (Element b = 0; b < n; ++b) d(a * n + b, g.mul(a, b)) = 1;
    s(g.inverse(a), a) = 1;
  }
  Bialgebra out(n, std::move(m), std::move(d));
  out.unit = RatVector(n, Rational(1));
  out.counit = unit_vector(n, g.identity());
  out.antipode = std::move(s);
  return out;
}

CharacterizedSpace bialgebra_left_units(const Bialgebra& b) {
  if (!b.unit) throw HypothesisError("unit", "bialgebra has no unit");
  const RatMatrix id = RatMatrix::identity(b.dim);
  const RatMatrix u = RatMatrix::column(*b.unit);
  if (b.mult * kron(id, u) != id) throw HypothesisError("unit", "stored unit is not a right unit");
  CharacterizedSpace out;
  out.applies = b.mult * kron(u, id) == id;
  if (out.applies) out.basis = kernel_basis(b.comult - kron(u, id));
  return out;
}

CharacterizedSpace bialgebra_left_counits(const Bialgebra& b) {
  if (!b.counit) throw HypothesisError("counit", "bialgebra has no counit");
  const std::size_t n = b.dim, n2 = n * n;
  const RatMatrix id = RatMatrix::identity(n);
  const RatMatrix f = RatMatrix::row(*b.counit);
  if (kron(id, f) * b.comult != id) throw HypothesisError("counit", "stored counit is not a right counit");
  CharacterizedSpace out;
  out.applies = kron(f, id) * b.comult == id;
  if (!out.applies) return out;
  // Column c of l o mult - counit (x) l.
  RatMatrix system(n2, n);
  for (std::size_t c = 0; c < n2; ++c) {
    for (std::size_t k = 0; k < n; ++k) system(c, k) = b.mult(k, c);
    system(c, c % n) -= (*b.counit)[c / n];
  }
  out.basis = kernel_basis(system);
  return out;
}

std::vector<RatVector> right_integrals(const Bialgebra& b) {
  if (!b.unit) throw HypothesisError("unit", "bialgebra has no unit");
  const std::size_t n = b.dim;
  // Entry (r, i) of (l (x) Id) comult - unit l.
  RatMatrix system(n * n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) system(r * n + i, j) = b.comult(j * n + r, i);
      system(r * n + i, i) -= (*b.unit)[r];
    }
  }
  return kernel_basis(system);
}

Bialgebra reconstruct_bialgebra(const LinearEAS& l, const RatVector& a, const RatVector& eps) {
  const std::size_t n = l.dim;
  if (a.size() != n || eps.size() != n) throw InputError("unit and counit must have length n");
  if (!is_left_unit(l, a)) throw HypothesisError("left unit", "a is not a left unit");
  if (!is_left_counit(l, eps)) throw HypothesisError("left counit", "eps is not a left counit");
  Rational pairing;
  for (std::size_t i = 0; i < n; ++i) pairing += eps[i] * a[i];
  if (!pairing.is_one()) throw HypothesisError("pairing", "eps(a) != 1");
  const RatMatrix id = RatMatrix::identity(n);
  Bialgebra out(n, kron(id, RatMatrix::row(eps)) * l.phi, l.phi * kron(id, RatMatrix::column(a)));
  out.unit = a;
  out.counit = eps;
  const AxiomReport r = check_bialgebra(out, UnitSides::left_only);
  if (const LawVerdict* f = r.first_failure()) throw HypothesisError("reconstruction", f->law + " fails", f->witness);
  if (leas_from_bialgebra(out).phi != l.phi) throw HypothesisError("reconstruction", "round trip differs");
  return out;
}

RatVector subset_sum(std::size_t size, const std::vector<Element>& subset) {
  RatVector v(size);
  for (Element x : subset) {
    if (x >= size) throw InputError("subset element out of range");
    v[x] = 1;
  }
  return v;
}

RatVector subgroup_sum(const GroupTable& g, const std::vector<Element>& subgroup) {
  if (!g.is_subgroup(subgroup)) throw HypothesisError("subgroup", "subset is not a subgroup");
  return subset_sum(g.size(), subgroup);
}

RatVector twisted_subgroup_vector(const GroupTable& group1, const GroupTable& group2,
                                  const std::vector<Element>& action, std::size_t set_size,
                                  const std::vector<Element>& h1, const std::vector<Element>& h2,
                                  const RatVector& weights) {
  const std::size_t n1 = group1.size(), n2 = group2.size();
  if (action.size() != n1 * n2 || weights.size() != set_size) throw InputError("component sizes disagree");
  if (!group1.is_subgroup(h1)) throw HypothesisError("subgroup", "first subset is not a subgroup");
  if (!group2.is_subgroup(h2)) throw HypothesisError("subgroup", "second subset is not a subgroup");
  for (Element g : h2) {
    for (Element a : h1) {
      if (std::find(h1.begin(), h1.end(), action[g * n1 + a]) == h1.end()) {
        throw HypothesisError("stability", "second subgroup does not preserve the first", {g, a});
      }
    }
  }
  RatVector v(n1 * n2 * set_size);
  for (Element a1 : h1) {
    for (Element a2 : h2) {
      for (std::size_t a3 = 0; a3 < set_size; ++a3) v[(a1 * n2 + a2) * set_size + a3] = weights[a3];
    }
  }
  return v;
}

}  // namespace easlab
