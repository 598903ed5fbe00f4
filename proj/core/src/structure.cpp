// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "easlab/axioms.hpp"
#include "easlab/constructions.hpp"
#include "easlab/error.hpp"
#include "easlab/isomorphism.hpp"

namespace easlab {

namespace {

using Perm = std::vector<Element>;

bool is_permutation(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (Element x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

bool is_identity(const Perm& p) {
  for (Element i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

Perm compose(const Perm& f, const Perm& g) {  // f o g
  Perm h(g.size());
  for (Element i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

Perm invert_perm(const Perm& p) {
  Perm q(p.size());
  for (Element i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

[[noreturn]] void fail(const std::string& stage, const std::string& what, std::vector<std::size_t> witness = {}) {
  throw HypothesisError(stage, what, std::move(witness));
}

GroupTable make_group(const std::string& stage, Magma table) {
  try {
    return GroupTable(std::move(table));
  } catch (const HypothesisError& err) {
    fail(stage, err.what(), err.witness());
  }
}

void require_nondegenerate_translations(const FiniteEAS& e, const char* stage) {
  if (!is_nondegenerate(e)) fail(stage, "input is degenerate");
  if (!is_strongly_nondegenerate(e)) fail(stage, "a left translation is not bijective");
}

}  // namespace

TranslationSystem translations(const FiniteEAS& e) {
  const std::size_t n = e.size();
  TranslationSystem t{n, std::vector<std::vector<Element>>(n, Perm(n)),
                      std::vector<std::vector<Element>>(n, Perm(n)), std::vector<bool>(n),
                      std::vector<bool>(n)};
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      t.left[a][b] = e.arrow(a, b);
      t.right[a][b] = e.tri(b, a);
    }
    t.left_bijective[a] = is_permutation(t.left[a]);
    t.right_bijective[a] = is_permutation(t.right[a]);
  }
  return t;
}

bool is_strongly_nondegenerate(const FiniteEAS& e) {
  const auto t = translations(e);
  return std::all_of(t.left_bijective.begin(), t.left_bijective.end(), [](bool b) { return b; });
}

bool left_translations_form_group(const FiniteEAS& e) {
  const auto t = translations(e);
  std::set<Perm> maps(t.left.begin(), t.left.end());
  for (const auto& f : maps) {
    if (!is_permutation(f)) return false;
  }
  if (!std::any_of(maps.begin(), maps.end(), is_identity)) return false;
  for (const auto& f : maps) {
    if (!maps.count(invert_perm(f))) return false;
    for (const auto& g : maps) {
      if (!maps.count(compose(f, g))) return false;
    }
  }
  return true;
}

std::vector<Element> omega_arrow(const FiniteEAS& e) {
  require_nondegenerate_translations(e, "omega_arrow");
  const auto t = translations(e);
  std::vector<Element> out;
  for (Element a = 0; a < e.size(); ++a) {
    if (is_identity(t.left[a])) out.push_back(a);
  }
  return out;
}

std::vector<Element> omega_tri(const FiniteEAS& e) {
  require_nondegenerate_translations(e, "omega_tri");
  const auto t = translations(e);
  std::vector<Element> out;
  for (Element a = 0; a < e.size(); ++a) {
    if (is_identity(t.right[a])) out.push_back(a);
  }
  return out;
}

TrivialArrowDecomposition trivial_arrow_decompose(const FiniteEAS& e) {
  const std::size_t n = e.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (e.arrow(a, b) != b) fail("trivial arrow", "a->b != b", {a, b});
    }
  }
  if (!is_nondegenerate(e)) fail("nondegeneracy", "input is degenerate");
  const auto t = translations(e);
  const auto& psi = t.right;
  std::vector<Perm> psi_inv(n);
  for (Element b = 0; b < n; ++b) psi_inv[b] = invert_perm(psi[b]);

  // c*b = a exactly when a|>b = c.
  std::vector<Element> star(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) star[a * n + b] = psi_inv[b][a];
  }
  const Magma mul(n, star);
  if (auto w = mul.associativity_failure()) fail("right division semigroup", "product is not associative", *w);
  if (make_right_division(mul) != e) fail("right division semigroup", "input is not EAS'(Ω,*)");

  for (Element b = 0; b < n; ++b) {
    for (Element c = 0; c < n; ++c) {
      if (compose(psi[b], psi[c]) != psi[mul(b, c)]) fail("translation laws", "ψ_b o ψ_c != ψ_{b*c}", {b, c});
      if (psi[e.tri(b, c)] != compose(psi[b], psi_inv[c])) {
        fail("translation laws", "ψ_{b|>c} != ψ_b o ψ_c^-1", {b, c});
      }
    }
  }

  TrivialArrowDecomposition out{{}, {}, GroupTable::trivial(), {}};
  for (Element a = 0; a < n; ++a) {
    if (is_identity(psi[a])) out.set_elements.push_back(a);
  }
  if (out.set_elements.empty()) fail("identity translation", "no element acts trivially");
  const Element beta0 = out.set_elements.front();
  std::set<Element> section;
  for (Element a = 0; a < n; ++a) section.insert(e.tri(beta0, a));
  out.group_elements.assign(section.begin(), section.end());

  const std::size_t m = out.group_elements.size();
  std::vector<Element> index(n, static_cast<Element>(n));
  for (Element i = 0; i < m; ++i) index[out.group_elements[i]] = i;
  std::vector<Element> group_cells(m * m);
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      const Element p = mul(out.group_elements[i], out.group_elements[j]);
      if (index[p] == n) fail("section group", "section is not closed under *", {out.group_elements[i], out.group_elements[j]});
      group_cells[i * m + j] = index[p];
    }
  }
  out.group = make_group("section group", Magma(m, std::move(group_cells)));

  const std::size_t k = out.set_elements.size();
  Morphism theta{k * m, n, std::vector<Element>(k * m)};
  for (Element s = 0; s < k; ++s) {
    for (Element g = 0; g < m; ++g) theta.map[s * m + g] = mul(out.set_elements[s], out.group_elements[g]);
  }
  const FiniteEAS model = direct_product(make_trivial(k), make_right_division(out.group.table()));
  if (!is_isomorphism(theta, model, e)) fail("product witness", "θ is not an isomorphism");
  out.witness = std::move(theta);
  return out;
}

FiniteEAS assemble_ceds(const GroupTable& group1, const GroupTable& group2,
                        const std::vector<Element>& left_action, std::size_t set_size) {
  const std::size_t n1 = group1.size(), n2 = group2.size();
  if (left_action.size() != n1 * n2) throw InputError("action table has wrong size");
  // The twisted product reads act[a*n2 + g] = a < g = g > a.
  std::vector<Element> prec(n1 * n2);
  for (Element g = 0; g < n2; ++g) {
    for (Element a = 0; a < n1; ++a) prec[a * n2 + g] = left_action[g * n1 + a];
  }
  const FiniteEAS twisted = semidirect_product(group1.table(), make_right_division(group2.table()), prec);
  return direct_product(twisted, make_trivial(set_size));
}

FiniteEAS assemble_dual_ceds(const GroupTable& group1, const GroupTable& group2,
                             const std::vector<Element>& right_action, std::size_t set_size) {
  const std::size_t n1 = group1.size(), n2 = group2.size(), n3 = set_size, n = n1 * n2 * n3;
  if (right_action.size() != n1 * n2) throw InputError("action table has wrong size");
  auto prec = [&](Element a, Element g) { return right_action[g * n1 + a]; };
  auto idx = [&](Element a2, Element a1, Element a3) { return static_cast<Element>((a2 * n1 + a1) * n3 + a3); };
  std::vector<Element> arrow(n * n), tri(n * n);
  for (Element a2 = 0; a2 < n2; ++a2) {
    for (Element a1 = 0; a1 < n1; ++a1) {
      for (Element a3 = 0; a3 < n3; ++a3) {
        const Element x = idx(a2, a1, a3);
        const Element a2inv = group2.inverse(a2);
        for (Element b2 = 0; b2 < n2; ++b2) {
          for (Element b1 = 0; b1 < n1; ++b1) {
            for (Element b3 = 0; b3 < n3; ++b3) {
              const Element y = idx(b2, b1, b3);
              arrow[x * n + y] = idx(group2.mul(a2, b2), prec(b1, a2inv), b3);
              tri[x * n + y] = idx(a2, group1.mul(a1, prec(group1.inverse(b1), a2inv)), a3);
            }
          }
        }
      }
    }
  }
  return FiniteEAS(n, std::move(arrow), std::move(tri));
}

FiniteEAS rebuild(const DecompositionReport& r) {
  return r.form == DecompositionForm::ceds ? assemble_ceds(r.group1, r.group2, r.action, r.set_size)
                                           : assemble_dual_ceds(r.group1, r.group2, r.action, r.set_size);
}

DecompositionReport ceds_decompose(const FiniteEAS& e) {
  DecompositionReport rep;
  auto pass = [&rep](const char* stage) { rep.stages.emplace_back(stage, true); };
  const std::size_t n = e.size();

  const AxiomReport ceds = check_ceds(e);
  if (const LawVerdict* f = ceds.first_failure()) fail("ceds axioms", f->law + " fails", f->witness);
  pass("ceds axioms");
  if (!is_nondegenerate(e)) fail("nondegeneracy", "pair map is not bijective");
  pass("nondegeneracy");
  if (!is_strongly_nondegenerate(e)) fail("strong nondegeneracy", "a left translation is not bijective");
  pass("strong nondegeneracy");
  if (!left_translations_form_group(e)) fail("translation group", "left translations do not form a group");
  pass("translation group");

  rep.omega_arrow = omega_arrow(e);
  rep.omega_tri = omega_tri(e);
  if (rep.omega_arrow.empty() || !is_sub_eas(e, rep.omega_arrow)) fail("arrow-fixed part", "not a nonempty sub-EAS");
  if (rep.omega_tri.empty() || !is_sub_eas(e, rep.omega_tri)) fail("tri-fixed part", "not a nonempty sub-EAS");
  pass("fixed parts");
  std::vector<bool> in_arrow(n, false), in_tri(n, false);
  for (Element a : rep.omega_arrow) in_arrow[a] = true;
  for (Element a : rep.omega_tri) in_tri[a] = true;
  {
    auto it = std::find_if(rep.omega_tri.begin(), rep.omega_tri.end(), [&](Element a) { return in_arrow[a]; });
    if (it == rep.omega_tri.end()) fail("base point", "fixed parts do not intersect");
    rep.beta0 = *it;
  }
  pass("base point");

  std::vector<bool> reached(n, false);
  for (Element a : rep.omega_tri) {
    for (Element b : rep.omega_arrow) reached[e.arrow(a, b)] = true;
  }
  for (Element g = 0; g < n; ++g) {
    if (!reached[g]) fail("factorization", "element is not tri-fixed -> arrow-fixed", {g});
  }
  pass("factorization");

  // Classes of a' ~ a'' = a'->a (a arrow-fixed, a'' tri-fixed) on the
  // tri-fixed part.
  const Element unset = static_cast<Element>(n);
  std::vector<Element> class_of(n, unset);
  std::vector<std::vector<Element>> classes;
  for (Element a : rep.omega_tri) {
    std::set<Element> orbit;
    for (Element b : rep.omega_arrow) {
      if (in_tri[e.arrow(a, b)]) orbit.insert(e.arrow(a, b));
    }
    if (class_of[a] != unset) {
      if (orbit != std::set<Element>(classes[class_of[a]].begin(), classes[class_of[a]].end())) {
        fail("group quotient", "relation is not an equivalence", {a});
      }
      continue;
    }
    const Element id = static_cast<Element>(classes.size());
    for (Element x : orbit) {
      if (class_of[x] != unset) fail("group quotient", "relation is not an equivalence", {a, x});
      class_of[x] = id;
    }
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  const std::size_t n1 = classes.size();
  auto cls = [&](Element x, const char* stage) {
    if (!in_tri[x]) fail(stage, "element is not tri-fixed", {x});
    return class_of[x];
  };
  std::vector<Element> g1(n1 * n1);
  for (Element i = 0; i < n1; ++i) {
    for (Element j = 0; j < n1; ++j) {
      g1[i * n1 + j] = cls(e.arrow(classes[i].front(), classes[j].front()), "group quotient");
      for (Element x : classes[i]) {
        for (Element y : classes[j]) {
          if (cls(e.arrow(x, y), "group quotient") != g1[i * n1 + j]) {
            fail("group quotient", "product is not well defined on classes", {x, y});
          }
        }
      }
    }
  }
  rep.group1 = make_group("group quotient", Magma(n1, std::move(g1)));
  if (!rep.group1.is_abelian()) fail("group quotient", "quotient group is not abelian");
  pass("abelian quotient group");

  const FiniteEAS fixed = sub_eas(e, rep.omega_arrow);
  const TrivialArrowDecomposition inner = trivial_arrow_decompose(fixed);
  pass("fixed part decomposition");
  rep.group2 = inner.group;
  rep.set_size = inner.set_size();
  const std::size_t n2 = rep.group2.size(), n3 = rep.set_size;
  auto element = [&](Element g, Element s) { return rep.omega_arrow[inner.witness(s * n2 + g)]; };

  rep.action.assign(n2 * n1, 0);
  for (Element g = 0; g < n2; ++g) {
    for (Element s = 0; s < n3; ++s) {
      const Element beta = element(g, s);
      for (Element a = 0; a < n1; ++a) {
        const Element v = cls(e.arrow(e.tri(classes[a].front(), beta), rep.beta0), "action");
        if (s == 0) {
          rep.action[g * n1 + a] = v;
        } else if (rep.action[g * n1 + a] != v) {
          fail("action", "action depends on the set component", {g, s, a});
        }
      }
    }
  }
  for (Element a = 0; a < n1; ++a) {
    if (rep.act(rep.group2.identity(), a) != a) fail("action", "identity does not act trivially", {a});
    for (Element g = 0; g < n2; ++g) {
      for (Element h = 0; h < n2; ++h) {
        if (rep.act(g, rep.act(h, a)) != rep.act(rep.group2.mul(g, h), a)) {
          fail("action", "composition law fails", {g, h, a});
        }
      }
      for (Element b = 0; b < n1; ++b) {
        if (rep.act(g, rep.group1.mul(a, b)) != rep.group1.mul(rep.act(g, a), rep.act(g, b))) {
          fail("action", "not an automorphism", {g, a, b});
        }
      }
    }
  }
  pass("action by automorphisms");

  rep.rebuilt = rebuild(rep);
  rep.theta = Morphism{n1 * n2 * n3, n, std::vector<Element>(n1 * n2 * n3)};
  for (Element a1 = 0; a1 < n1; ++a1) {
    for (Element a2 = 0; a2 < n2; ++a2) {
      for (Element a3 = 0; a3 < n3; ++a3) {
        rep.theta.map[(a1 * n2 + a2) * n3 + a3] = e.arrow(classes[a1].front(), element(a2, a3));
      }
    }
  }
  if (!is_isomorphism(rep.theta, rep.rebuilt, e)) fail("isomorphism", "θ is not an isomorphism");
  pass("isomorphism");
  return rep;
}

DecompositionReport decompose_dual(const FiniteEAS& e) {
  const AxiomReport dual = check_dual_ceds(e);
  if (const LawVerdict* f = dual.first_failure()) fail("dual ceds axioms", f->law + " fails", f->witness);
  if (!is_nondegenerate(e)) fail("nondegeneracy", "pair map is not bijective");

  const DecompositionReport inner = ceds_decompose(inverse_eas(e));
  DecompositionReport rep;
  rep.form = DecompositionForm::dual_ceds;
  rep.stages.emplace_back("dual ceds axioms", true);
  rep.stages.emplace_back("nondegeneracy", true);
  for (const auto& s : inner.stages) rep.stages.emplace_back("inverse: " + s.first, s.second);
  rep.group1 = inner.group1;
  rep.group2 = inner.group2.opposite();
  rep.set_size = inner.set_size;
  rep.beta0 = inner.beta0;
  rep.omega_arrow = omega_arrow(e);
  rep.omega_tri = omega_tri(e);
  // a < g := g > a is a right action of the opposite group.
  rep.action = inner.action;

  const std::size_t n1 = rep.group1.size(), n2 = rep.group2.size(), n3 = rep.set_size;
  rep.rebuilt = rebuild(rep);
  rep.theta = Morphism{n1 * n2 * n3, e.size(), std::vector<Element>(n1 * n2 * n3)};
  for (Element a2 = 0; a2 < n2; ++a2) {
    for (Element a1 = 0; a1 < n1; ++a1) {
      for (Element a3 = 0; a3 < n3; ++a3) {
        rep.theta.map[(a2 * n1 + a1) * n3 + a3] = inner.theta((a1 * n2 + a2) * n3 + a3);
      }
    }
  }
  if (!is_isomorphism(rep.theta, rep.rebuilt, e)) fail("dual isomorphism", "θ is not an isomorphism");
  rep.stages.emplace_back("dual isomorphism", true);
  return rep;
}

}  // namespace easlab
