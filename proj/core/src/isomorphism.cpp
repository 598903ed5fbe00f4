// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/isomorphism.hpp"

#include <algorithm>

#include "easlab/error.hpp"

namespace easlab {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

// Cheap relabeling invariants: sorted counts of idempotents and of row/column
// constants prune obviously different pairs before the search.
std::vector<std::size_t> profile(const FiniteEAS& e) {
  const std::size_t n = e.size();
  std::vector<std::size_t> p;
  std::size_t arrow_idem = 0, tri_idem = 0;
  std::vector<std::size_t> arrow_hits(n, 0), tri_hits(n, 0);
  for (Element a = 0; a < n; ++a) {
    arrow_idem += e.arrow(a, a) == a;
    tri_idem += e.tri(a, a) == a;
    for (Element b = 0; b < n; ++b) {
      ++arrow_hits[e.arrow(a, b)];
      ++tri_hits[e.tri(a, b)];
    }
  }
  std::sort(arrow_hits.begin(), arrow_hits.end());
  std::sort(tri_hits.begin(), tri_hits.end());
  p.push_back(arrow_idem);
  p.push_back(tri_idem);
  p.insert(p.end(), arrow_hits.begin(), arrow_hits.end());
  p.insert(p.end(), tri_hits.begin(), tri_hits.end());
  return p;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteEAS& e1, const FiniteEAS& e2)
      : e1_(e1), e2_(e2), n_(e1.size()), f_(n_, kUnset), used_(n_, false) {}

  bool run(Element k) {
    if (k == n_) return true;
    for (Element v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      f_[k] = v;
      used_[v] = true;
      if (consistent(k) && run(k + 1)) return true;
      used_[v] = false;
      f_[k] = kUnset;
    }
    return false;
  }

  const std::vector<Element>& map() const { return f_; }

 private:
  // Checks every product involving k and already-mapped elements whose
  // result is also mapped.
  bool consistent(Element k) const {
    for (Element a = 0; a <= k; ++a) {
      if (!check_pair(a, k) || !check_pair(k, a)) return false;
    }
    return true;
  }

  bool check_pair(Element a, Element b) const {
    const Element fa = f_[a], fb = f_[b];
    const Element ab = e1_.arrow(a, b), tb = e1_.tri(a, b);
    const Element target_arrow = e2_.arrow(fa, fb), target_tri = e2_.tri(fa, fb);
    if (f_[ab] != kUnset) {
      if (f_[ab] != target_arrow) return false;
    } else if (used_[target_arrow]) {
      return false;
    }
    if (f_[tb] != kUnset) {
      if (f_[tb] != target_tri) return false;
    } else if (used_[target_tri]) {
      return false;
    }
    return true;
  }

  const FiniteEAS& e1_;
  const FiniteEAS& e2_;
  std::size_t n_;
  std::vector<Element> f_;
  std::vector<bool> used_;
};

}  // namespace

FiniteEAS relabel(const FiniteEAS& e, const std::vector<Element>& sigma) {
  const std::size_t n = e.size();
  const Morphism m{n, n, sigma};
  if (!m.is_bijective()) throw InputError("relabeling is not a permutation");
  std::vector<Element> arrow(n * n), tri(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      arrow[sigma[a] * n + sigma[b]] = sigma[e.arrow(a, b)];
      tri[sigma[a] * n + sigma[b]] = sigma[e.tri(a, b)];
    }
  }
  return FiniteEAS(n, std::move(arrow), std::move(tri));
}

bool check_morphism(const Morphism& f, const FiniteEAS& source, const FiniteEAS& target) {
  if (f.source_size != source.size() || f.target_size != target.size() || f.map.size() != source.size()) {
    return false;
  }
  for (Element x : f.map) {
    if (x >= target.size()) return false;
  }
  for (Element a = 0; a < source.size(); ++a) {
    for (Element b = 0; b < source.size(); ++b) {
      if (f(source.arrow(a, b)) != target.arrow(f(a), f(b))) return false;
      if (f(source.tri(a, b)) != target.tri(f(a), f(b))) return false;
    }
  }
  return true;
}

bool is_isomorphism(const Morphism& f, const FiniteEAS& source, const FiniteEAS& target) {
  return f.is_bijective() && check_morphism(f, source, target);
}

std::optional<Morphism> is_isomorphic(const FiniteEAS& e1, const FiniteEAS& e2) {
  if (e1.size() != e2.size()) return std::nullopt;
  if (profile(e1) != profile(e2)) return std::nullopt;
  IsoSearch search(e1, e2);
  if (!search.run(0)) return std::nullopt;
  return Morphism{e1.size(), e2.size(), search.map()};
}

}  // namespace easlab
