// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/axioms.hpp"

#include <array>
#include <functional>
#include <string>

#include "easlab/error.hpp"

namespace easlab {

namespace {

struct Ops {
  std::size_t n;
  const Element* la;  // a<-b
  const Element* ar;  // a->b
  const Element* lt;  // a<|b
  const Element* tr;  // a|>b

  Element L(Element a, Element b) const { return la[a * n + b]; }
  Element A(Element a, Element b) const { return ar[a * n + b]; }
  Element LT(Element a, Element b) const { return lt[a * n + b]; }
  Element T(Element a, Element b) const { return tr[a * n + b]; }
};

struct Law {
  const char* name;
  std::function<bool(const Ops&, Element, Element, Element)> holds;
};

// Each law is checked over all triples in lexicographic order.
AxiomReport run(const char* subject, const Ops& ops, const std::vector<Law>& laws) {
  AxiomReport report{subject, {}};
  for (const auto& law : laws) {
    LawVerdict v{law.name, true, {}};
    for (Element a = 0; a < ops.n && v.holds; ++a) {
      for (Element b = 0; b < ops.n && v.holds; ++b) {
        for (Element c = 0; c < ops.n; ++c) {
          if (!law.holds(ops, a, b, c)) {
            v.holds = false;
            v.witness = {a, b, c};
            break;
          }
        }
      }
    }
    report.laws.push_back(std::move(v));
  }
  return report;
}

const Law kArrowAssoc{"a->(b->c) = (a->b)->c", [](const Ops& o, Element a, Element b, Element c) {
                        return o.A(a, o.A(b, c)) == o.A(o.A(a, b), c);
                      }};
const Law kArrowTri{"(a|>(b->c))->(b|>c) = (a->b)|>c",
                    [](const Ops& o, Element a, Element b, Element c) {
                      return o.A(o.T(a, o.A(b, c)), o.T(b, c)) == o.T(o.A(a, b), c);
                    }};
const Law kTriTri{"(a|>(b->c))|>(b|>c) = a|>b", [](const Ops& o, Element a, Element b, Element c) {
                    return o.T(o.T(a, o.A(b, c)), o.T(b, c)) == o.T(a, b);
                  }};

const std::vector<Law>& eas_laws() {
  static const std::vector<Law> laws{kArrowAssoc, kArrowTri, kTriTri};
  return laws;
}

const std::vector<Law>& ceds_laws() {
  static const std::vector<Law> laws{
      kArrowAssoc,
      {"(a->b)->c = (b->a)->c",
       [](const Ops& o, Element a, Element b, Element c) { return o.A(o.A(a, b), c) == o.A(o.A(b, a), c); }},
      {"a|>(b->c) = a|>c",
       [](const Ops& o, Element a, Element b, Element c) { return o.T(a, o.A(b, c)) == o.T(a, c); }},
      {"(a|>c)->(b|>c) = (a->b)|>c",
       [](const Ops& o, Element a, Element b, Element c) {
         return o.A(o.T(a, c), o.T(b, c)) == o.T(o.A(a, b), c);
       }},
      {"(a|>c)|>(b|>c) = a|>b",
       [](const Ops& o, Element a, Element b, Element c) { return o.T(o.T(a, c), o.T(b, c)) == o.T(a, b); }},
  };
  return laws;
}

const std::vector<Law>& dual_ceds_laws() {
  static const std::vector<Law> laws{
      kArrowAssoc,
      kArrowTri,
      kTriTri,
      {"(a|>b)->c = a->c",
       [](const Ops& o, Element a, Element b, Element c) { return o.A(o.T(a, b), c) == o.A(a, c); }},
      {"(a|>b)|>c = (a|>c)|>b",
       [](const Ops& o, Element a, Element b, Element c) { return o.T(o.T(a, b), c) == o.T(o.T(a, c), b); }},
  };
  return laws;
}

const std::vector<Law>& eds_laws() {
  using O = const Ops&;
  static const std::vector<Law> laws{
      {"(a<-b)<-c = a<-(b<-c)", [](O o, Element a, Element b, Element c) { return o.L(o.L(a, b), c) == o.L(a, o.L(b, c)); }},
      {"a<-(b<-c) = a<-(b->c)", [](O o, Element a, Element b, Element c) { return o.L(a, o.L(b, c)) == o.L(a, o.A(b, c)); }},
      {"(a->b)<-c = a->(b<-c)", [](O o, Element a, Element b, Element c) { return o.L(o.A(a, b), c) == o.A(a, o.L(b, c)); }},
      {"(a->b)->c = (a<-b)->c", [](O o, Element a, Element b, Element c) { return o.A(o.A(a, b), c) == o.A(o.L(a, b), c); }},
      {"(a<-b)->c = a->(b->c)", [](O o, Element a, Element b, Element c) { return o.A(o.L(a, b), c) == o.A(a, o.A(b, c)); }},
      {"a|>(b<-c) = a|>b", [](O o, Element a, Element b, Element c) { return o.T(a, o.L(b, c)) == o.T(a, b); }},
      {"(a->b)<|c = b<|c", [](O o, Element a, Element b, Element c) { return o.LT(o.A(a, b), c) == o.LT(b, c); }},
      {"(a<|b)<-((a<-b)<|c) = a<|(b<-c)",
       [](O o, Element a, Element b, Element c) { return o.L(o.LT(a, b), o.LT(o.L(a, b), c)) == o.LT(a, o.L(b, c)); }},
      {"(a<|b)<|((a<-b)<|c) = b<|c",
       [](O o, Element a, Element b, Element c) { return o.LT(o.LT(a, b), o.LT(o.L(a, b), c)) == o.LT(b, c); }},
      {"(a<|b)->((a<-b)<|c) = a<|(b->c)",
       [](O o, Element a, Element b, Element c) { return o.A(o.LT(a, b), o.LT(o.L(a, b), c)) == o.LT(a, o.A(b, c)); }},
      {"(a<|b)|>((a<-b)<|c) = b|>c",
       [](O o, Element a, Element b, Element c) { return o.T(o.LT(a, b), o.LT(o.L(a, b), c)) == o.T(b, c); }},
      {"(a|>(b->c))<-(b|>c) = (a<-b)|>c",
       [](O o, Element a, Element b, Element c) { return o.L(o.T(a, o.A(b, c)), o.T(b, c)) == o.T(o.L(a, b), c); }},
      {"(a|>(b->c))<|(b|>c) = a<|b",
       [](O o, Element a, Element b, Element c) { return o.LT(o.T(a, o.A(b, c)), o.T(b, c)) == o.LT(a, b); }},
      kArrowTri,
      kTriTri,
  };
  return laws;
}

Ops ops_of(const FiniteEAS& e) {
  return {e.size(), nullptr, e.arrow_table().data(), nullptr, e.tri_table().data()};
}

using Triple = std::array<Element, 3>;
using TripleMap = std::function<Triple(const Triple&)>;

TripleMap compose(std::initializer_list<TripleMap> right_to_left) {
  std::vector<TripleMap> maps(right_to_left);
  return [maps](const Triple& t) {
    Triple x = t;
    for (auto it = maps.rbegin(); it != maps.rend(); ++it) x = (*it)(x);
    return x;
  };
}

struct PairMapMoves {
  TripleMap phi1, phi2, tau1, tau2;
};

PairMapMoves moves(const FiniteEAS& e) {
  auto phi1 = [&e](const Triple& t) { return Triple{e.arrow(t[0], t[1]), e.tri(t[0], t[1]), t[2]}; };
  auto phi2 = [&e](const Triple& t) { return Triple{t[0], e.arrow(t[1], t[2]), e.tri(t[1], t[2])}; };
  auto tau1 = [](const Triple& t) { return Triple{t[1], t[0], t[2]}; };
  auto tau2 = [](const Triple& t) { return Triple{t[0], t[2], t[1]}; };
  return {phi1, phi2, tau1, tau2};
}

bool maps_agree(std::size_t n, const TripleMap& f, const TripleMap& g) {
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (f({a, b, c}) != g({a, b, c})) return false;
      }
    }
  }
  return true;
}

bool braid_identity(const FiniteEAS& e) {
  auto m = moves(e);
  return maps_agree(e.size(), compose({m.phi2, m.phi1, m.phi2}), compose({m.phi1, m.tau2, m.phi1}));
}

}  // namespace

AxiomReport check_eas(const FiniteEAS& e) { return run("eas", ops_of(e), eas_laws()); }
AxiomReport check_ceds(const FiniteEAS& e) { return run("ceds", ops_of(e), ceds_laws()); }
AxiomReport check_dual_ceds(const FiniteEAS& e) { return run("dual-ceds", ops_of(e), dual_ceds_laws()); }

AxiomReport check_eds(const FiniteEDS& d) {
  Ops ops{d.size(), d.larrow_table().data(), d.arrow_table().data(), d.ltri_table().data(),
          d.tri_table().data()};
  return run("eds", ops, eds_laws());
}

bool satisfies_eas(std::size_t n, const Element* ar, const Element* tr) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = ar[a * n + b];
      const Element atb = tr[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        const Element bc = ar[b * n + c];
        const Element btc = tr[b * n + c];
        if (ar[a * n + bc] != ar[ab * n + c]) return false;
        const Element x = tr[a * n + bc];
        if (ar[x * n + btc] != tr[ab * n + c]) return false;
        if (tr[x * n + btc] != atb) return false;
      }
    }
  }
  return true;
}

bool satisfies_ceds(std::size_t n, const Element* ar, const Element* tr) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Element ab = ar[a * n + b];
        if (ar[a * n + ar[b * n + c]] != ar[ab * n + c]) return false;
        if (ar[ab * n + c] != ar[ar[b * n + a] * n + c]) return false;
        if (tr[a * n + ar[b * n + c]] != tr[a * n + c]) return false;
        const Element ac = tr[a * n + c];
        const Element bc = tr[b * n + c];
        if (ar[ac * n + bc] != tr[ab * n + c]) return false;
        if (tr[ac * n + bc] != tr[a * n + b]) return false;
      }
    }
  }
  return true;
}

bool satisfies_dual_ceds(std::size_t n, const Element* ar, const Element* tr) {
  if (!satisfies_eas(n, ar, tr)) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element atb = tr[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (ar[atb * n + c] != ar[a * n + c]) return false;
        if (tr[atb * n + c] != tr[tr[a * n + c] * n + b]) return false;
      }
    }
  }
  return true;
}

bool check_eas_via_pair_map(const FiniteEAS& e) { return braid_identity(e); }

bool check_ceds_via_pair_map(const FiniteEAS& e) {
  if (!braid_identity(e)) return false;
  auto m = moves(e);
  return maps_agree(e.size(), compose({m.phi2, m.tau2, m.tau1, m.phi1}),
                    compose({m.tau1, m.phi1, m.phi2, m.tau2}));
}

bool check_dual_ceds_via_pair_map(const FiniteEAS& e) {
  if (!braid_identity(e)) return false;
  auto m = moves(e);
  return maps_agree(e.size(), compose({m.phi1, m.tau1, m.tau2, m.phi2}),
                    compose({m.tau2, m.phi2, m.phi1, m.tau1}));
}

FiniteEDS commutative_eds(const FiniteEAS& e) {
  const std::size_t n = e.size();
  std::vector<Element> larrow(n * n), ltri(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      larrow[a * n + b] = e.arrow(b, a);
      ltri[a * n + b] = e.tri(b, a);
    }
  }
  return FiniteEDS(n, std::move(larrow), e.arrow_table(), std::move(ltri), e.tri_table());
}

FiniteEAS right_part(const FiniteEDS& d) {
  const AxiomReport r = check_eds(d);
  if (const LawVerdict* f = r.first_failure()) {
    throw HypothesisError("right_part", "input is not an EDS: " + f->law + " fails", f->witness);
  }
  return FiniteEAS(d.size(), d.arrow_table(), d.tri_table());
}

PairMap phi_map(const FiniteEAS& e) {
  PairMap p{e.size(), {}};
  p.image.reserve(e.size() * e.size());
  for (Element a = 0; a < e.size(); ++a) {
    for (Element b = 0; b < e.size(); ++b) p.image.emplace_back(e.arrow(a, b), e.tri(a, b));
  }
  return p;
}

bool is_nondegenerate(const FiniteEAS& e) { return phi_map(e).is_bijective(); }

FiniteEAS inverse_operations(const FiniteEAS& e) {
  const std::size_t n = e.size();
  std::vector<Element> arrow(n * n), tri(n * n);
  std::vector<bool> hit(n * n, false);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const std::size_t k = e.arrow(a, b) * n + e.tri(a, b);
      if (hit[k]) throw HypothesisError("inverse", "pair map is not bijective", {a, b});
      hit[k] = true;
      arrow[k] = a;
      tri[k] = b;
    }
  }
  return FiniteEAS(n, std::move(arrow), std::move(tri));
}

FiniteEAS inverse_eas(const FiniteEAS& e) {
  const AxiomReport r = check_eas(e);
  if (const LawVerdict* f = r.first_failure()) {
    throw HypothesisError("inverse_eas", "input is not an EAS: " + f->law + " fails", f->witness);
  }
  return inverse_operations(e);
}

}  // namespace easlab
