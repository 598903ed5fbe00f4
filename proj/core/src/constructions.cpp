// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/constructions.hpp"

#include <algorithm>
#include <string>

#include "easlab/axioms.hpp"
#include "easlab/error.hpp"

namespace easlab {

namespace {

void require_associative(const Magma& mul, const char* stage) {
  if (auto w = mul.associativity_failure()) {
    throw HypothesisError(stage, "operation is not associative", *w);
  }
}

}  // namespace

FiniteEAS make_trivial(std::size_t n) {
  std::vector<Element> arrow(n * n), tri(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      arrow[a * n + b] = b;
      tri[a * n + b] = a;
    }
  }
  return FiniteEAS(n, std::move(arrow), std::move(tri));
}

FiniteEAS make_semigroup_eas(const Magma& mul, const std::vector<Element>& pi) {
  const std::size_t n = mul.size();
  require_associative(mul, "make_semigroup_eas");
  if (pi.size() != n) throw InputError("projection has wrong length");
  for (Element a = 0; a < n; ++a) {
    if (pi[a] >= n) throw InputError("projection value out of range");
    if (pi[pi[a]] != pi[a]) throw HypothesisError("make_semigroup_eas", "projection is not idempotent", {a});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (pi[mul(a, b)] != mul(pi[a], pi[b])) {
        throw HypothesisError("make_semigroup_eas", "projection is not an endomorphism", {a, b});
      }
    }
  }
  std::vector<Element> tri(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) tri[a * n + b] = pi[a];
  }
  return FiniteEAS(n, mul.cells(), std::move(tri));
}

FiniteEAS make_semigroup_eas(const Magma& mul) {
  std::vector<Element> id(mul.size());
  for (Element a = 0; a < id.size(); ++a) id[a] = a;
  return make_semigroup_eas(mul, id);
}

FiniteEAS make_right_division(const Magma& mul) {
  const std::size_t n = mul.size();
  require_associative(mul, "make_right_division");
  std::vector<Element> arrow(n * n), tri(n * n, static_cast<Element>(n));
  for (Element c = 0; c < n; ++c) {
    for (Element b = 0; b < n; ++b) {
      const Element a = mul(c, b);
      if (tri[a * n + b] != n) {
        throw HypothesisError("make_right_division", "right division is not unique", {a, b});
      }
      tri[a * n + b] = c;
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (tri[a * n + b] == n) throw HypothesisError("make_right_division", "right division has no solution", {a, b});
      arrow[a * n + b] = b;
    }
  }
  return FiniteEAS(n, std::move(arrow), std::move(tri));
}

FiniteEAS direct_product(const FiniteEAS& e1, const FiniteEAS& e2) {
  const std::size_t n1 = e1.size(), n2 = e2.size(), n = n1 * n2;
  std::vector<Element> arrow(n * n), tri(n * n);
  for (Element a = 0; a < n1; ++a) {
    for (Element a2 = 0; a2 < n2; ++a2) {
      const Element x = a * n2 + a2;
      for (Element b = 0; b < n1; ++b) {
        for (Element b2 = 0; b2 < n2; ++b2) {
          const Element y = b * n2 + b2;
          arrow[x * n + y] = e1.arrow(a, b) * n2 + e2.arrow(a2, b2);
          tri[x * n + y] = e1.tri(a, b) * n2 + e2.tri(a2, b2);
        }
      }
    }
  }
  return FiniteEAS(n, std::move(arrow), std::move(tri));
}

FiniteEAS semidirect_product(const Magma& mul, const FiniteEAS& e2, const std::vector<Element>& act) {
  const char* stage = "semidirect_product";
  const std::size_t n1 = mul.size(), n2 = e2.size();
  if (act.size() != n1 * n2) throw InputError("action table has wrong size");
  for (Element x : act) {
    if (x >= n1) throw InputError("action value out of range");
  }
  require_associative(mul, stage);
  for (Element a = 0; a < n1; ++a) {
    for (Element b = 0; b < n1; ++b) {
      for (Element c = 0; c < n1; ++c) {
        if (mul(mul(a, b), c) != mul(mul(b, a), c)) {
          throw HypothesisError(stage, "a*b*c = b*a*c fails", {a, b, c});
        }
      }
    }
  }
  const AxiomReport ceds = check_ceds(e2);
  if (const LawVerdict* f = ceds.first_failure()) {
    throw HypothesisError(stage, "second factor is not a CEDS: " + f->law + " fails", f->witness);
  }
  auto prec = [&](Element a, Element b2) { return act[a * n2 + b2]; };
  for (Element a = 0; a < n1; ++a) {
    for (Element b2 = 0; b2 < n2; ++b2) {
      for (Element c2 = 0; c2 < n2; ++c2) {
        if (prec(a, e2.arrow(b2, c2)) != prec(a, c2)) {
          throw HypothesisError(stage, "a<(b'->c') = a<c' fails", {a, b2, c2});
        }
        if (prec(prec(a, c2), e2.tri(b2, c2)) != prec(a, b2)) {
          throw HypothesisError(stage, "(a<c')<(b'|>c') = a<b' fails", {a, b2, c2});
        }
      }
    }
    for (Element b = 0; b < n1; ++b) {
      for (Element c2 = 0; c2 < n2; ++c2) {
        if (prec(mul(a, b), c2) != mul(prec(a, c2), prec(b, c2))) {
          throw HypothesisError(stage, "(a*b)<c' = (a<c')*(b<c') fails", {a, b, c2});
        }
      }
    }
  }
  const std::size_t n = n1 * n2;
  std::vector<Element> arrow(n * n), tri(n * n);
  for (Element a = 0; a < n1; ++a) {
    for (Element a2 = 0; a2 < n2; ++a2) {
      const Element x = a * n2 + a2;
      for (Element b = 0; b < n1; ++b) {
        for (Element b2 = 0; b2 < n2; ++b2) {
          const Element y = b * n2 + b2;
          arrow[x * n + y] = mul(a, b) * n2 + e2.arrow(a2, b2);
          tri[x * n + y] = prec(a, b2) * n2 + e2.tri(a2, b2);
        }
      }
    }
  }
  return FiniteEAS(n, std::move(arrow), std::move(tri));
}

bool is_compatible(const FiniteEAS& e, const Congruence& c) {
  if (c.size() != e.size()) throw InputError("congruence size does not match the carrier");
  const std::size_t k = c.block_count();
  // The class of a->b depends only on the classes of a and b.
  std::vector<std::size_t> arrow(k * k, k), tri(k * k, k);
  for (Element a = 0; a < e.size(); ++a) {
    for (Element b = 0; b < e.size(); ++b) {
      const std::size_t idx = c.block_of(a) * k + c.block_of(b);
      const std::size_t ab = c.block_of(e.arrow(a, b)), tb = c.block_of(e.tri(a, b));
      if (arrow[idx] == k) {
        arrow[idx] = ab;
        tri[idx] = tb;
      } else if (arrow[idx] != ab || tri[idx] != tb) {
        return false;
      }
    }
  }
  return true;
}

FiniteEAS quotient(const FiniteEAS& e, const Congruence& c) {
  if (!is_compatible(e, c)) throw HypothesisError("quotient", "partition is not compatible with the operations");
  const std::size_t k = c.block_count();
  std::vector<Element> arrow(k * k), tri(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element a = c.blocks()[i].front(), b = c.blocks()[j].front();
      arrow[i * k + j] = static_cast<Element>(c.block_of(e.arrow(a, b)));
      tri[i * k + j] = static_cast<Element>(c.block_of(e.tri(a, b)));
    }
  }
  return FiniteEAS(k, std::move(arrow), std::move(tri));
}

bool is_sub_eas(const FiniteEAS& e, const std::vector<Element>& subset) {
  if (subset.empty()) return false;
  std::vector<bool> in(e.size(), false);
  for (Element a : subset) {
    if (a >= e.size()) throw InputError("subset element out of range");
    in[a] = true;
  }
  for (Element a : subset) {
    for (Element b : subset) {
      if (!in[e.arrow(a, b)] || !in[e.tri(a, b)]) return false;
    }
  }
  return true;
}

FiniteEAS sub_eas(const FiniteEAS& e, const std::vector<Element>& subset) {
  if (!is_sub_eas(e, subset)) throw HypothesisError("sub_eas", "subset is not closed under both operations");
  std::vector<Element> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Element> index(e.size(), 0);
  for (Element i = 0; i < sorted.size(); ++i) index[sorted[i]] = i;
  const std::size_t k = sorted.size();
  std::vector<Element> arrow(k * k), tri(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      arrow[i * k + j] = index[e.arrow(sorted[i], sorted[j])];
      tri[i * k + j] = index[e.tri(sorted[i], sorted[j])];
    }
  }
  return FiniteEAS(k, std::move(arrow), std::move(tri));
}

}  // namespace easlab
