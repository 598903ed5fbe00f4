// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "easlab/axioms.hpp"
#include "easlab/error.hpp"
#include "easlab/isomorphism.hpp"

namespace easlab {

namespace {

// Row-major backtracking over cells; a triple is checked as soon as every
// cell it reads is assigned.
class AssociativeSearch {
 public:
  explicit AssociativeSearch(std::size_t n) : n_(n), cells_(n * n, kUnset) {}

  std::vector<Magma> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  Element at(std::size_t a, std::size_t b) const { return cells_[a * n_ + b]; }

  bool consistent() const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        const Element ab = at(a, b);
        if (ab == kUnset) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          const Element bc = at(b, c);
          if (bc == kUnset) continue;
          const Element l = at(ab, c), r = at(a, bc);
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    }
    return true;
  }

  void fill(std::size_t k) {
    if (k == cells_.size()) {
      found_.emplace_back(n_, cells_);
      return;
    }
    for (Element v = 0; v < n_; ++v) {
      cells_[k] = v;
      if (consistent()) fill(k + 1);
    }
    cells_[k] = kUnset;
  }

  std::size_t n_;
  std::vector<Element> cells_;
  std::vector<Magma> found_;
};

bool passes(const EnumerationFilter& f, std::size_t n, const Element* arrow, const Element* tri) {
  if (f.ceds && !satisfies_ceds(n, arrow, tri)) return false;
  if (f.dual_ceds && !satisfies_dual_ceds(n, arrow, tri)) return false;
  if (f.nondegenerate) {
    std::vector<bool> hit(n * n, false);
    for (std::size_t k = 0; k < n * n; ++k) {
      const std::size_t img = arrow[k] * n + tri[k];
      if (hit[img]) return false;
      hit[img] = true;
    }
  }
  return true;
}

// All tri tables completing `arrow`, by odometer in lexicographic order.
void for_each_tri(const Magma& arrow, const EnumerationFilter& filter,
                  const std::function<void(const FiniteEAS&)>& visit) {
  const std::size_t n = arrow.size(), cells = n * n;
  std::vector<Element> tri(cells, 0);
  const Element* ar = arrow.cells().data();
  while (true) {
    if (satisfies_eas(n, ar, tri.data()) && passes(filter, n, ar, tri.data())) {
      visit(FiniteEAS(n, arrow.cells(), tri));
    }
    std::size_t k = cells;
    while (k > 0 && tri[k - 1] == n - 1) tri[--k] = 0;
    if (k == 0) break;
    ++tri[k - 1];
  }
}

std::string describe_labeled(const FiniteEAS& e) {
  const std::size_t n = e.size();
  bool right_projection = true, left_tri = true, tri_ignores_right = true;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      right_projection = right_projection && e.arrow(a, b) == b;
      left_tri = left_tri && e.tri(a, b) == a;
      tri_ignores_right = tri_ignores_right && e.tri(a, b) == e.tri(a, 0);
    }
  }
  if (right_projection && left_tri) return "EAS(Ω)";
  const Magma arrow = e.arrow_magma();
  if (arrow.is_associative()) {
    if (left_tri) return "EAS(Ω,*)";
    if (tri_ignores_right) {
      bool endo = true;
      for (Element a = 0; a < n && endo; ++a) {
        const Element pa = e.tri(a, 0);
        endo = e.tri(pa, 0) == pa;
        for (Element b = 0; b < n && endo; ++b) endo = e.tri(arrow(a, b), 0) == arrow(pa, e.tri(b, 0));
      }
      if (endo) return "EAS(Ω,*,π)";
    }
  }
  if (right_projection) {
    // c*b = a exactly when a|>b = c; needs each column of |> to be a bijection.
    std::vector<Element> star(n * n, static_cast<Element>(n));
    bool ok = true;
    for (Element b = 0; b < n && ok; ++b) {
      for (Element a = 0; a < n && ok; ++a) {
        Element& slot = star[e.tri(a, b) * n + b];
        ok = slot == n;
        slot = a;
      }
    }
    if (ok && Magma(n, star).is_associative()) return "EAS'(Ω,*)";
  }
  return "unnamed";
}

}  // namespace

std::vector<Magma> associative_tables(std::size_t n) {
  if (n == 0) throw InputError("carrier must be nonempty");
  return AssociativeSearch(n).run();
}

void for_each_eas(std::size_t n, const EnumerationFilter& filter,
                  const std::function<void(const FiniteEAS&)>& visit) {
  for (const Magma& arrow : associative_tables(n)) for_each_tri(arrow, filter, visit);
}

std::vector<FiniteEAS> enumerate_eas(std::size_t n, const EnumerationFilter& filter, std::size_t jobs) {
  const std::vector<Magma> arrows = associative_tables(n);
  std::vector<std::vector<FiniteEAS>> slices(arrows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < arrows.size(); i = next++) {
      for_each_tri(arrows[i], filter, [&](const FiniteEAS& e) { slices[i].push_back(e); });
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, arrows.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // Slices follow arrow order and are internally sorted, so concatenation
  // is already the global lexicographic order.
  std::vector<FiniteEAS> out;
  for (auto& s : slices) {
    for (auto& e : s) out.push_back(std::move(e));
  }
  return out;
}

FiniteEAS canonical_form(const FiniteEAS& e) {
  std::vector<Element> sigma(e.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  FiniteEAS best = e;
  do {
    FiniteEAS candidate = relabel(e, sigma);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

std::vector<CensusEntry> classify_up_to_iso(std::size_t n, const EnumerationFilter& filter,
                                            std::size_t jobs, bool allow_large) {
  if (n > kCensusSoftLimit && !allow_large) {
    throw InputError("classification above size " + std::to_string(kCensusSoftLimit) +
                     " needs the allow-large override");
  }
  const std::vector<FiniteEAS> all = enumerate_eas(n, filter, jobs);
  std::map<FiniteEAS, std::size_t> orbits;
  for (const auto& e : all) ++orbits[canonical_form(e)];
  std::vector<CensusEntry> census;
  for (const auto& [rep, count] : orbits) {
    CensusEntry entry{rep, check_ceds(rep).holds(), check_dual_ceds(rep).holds(), is_nondegenerate(rep),
                      count, describe(rep), n == 2 ? cardinality_two_label(rep) : std::string()};
    census.push_back(std::move(entry));
  }
  return census;
}

std::string describe(const FiniteEAS& e) { return describe_labeled(e); }

const std::vector<LabeledTable>& cardinality_two_table() {
  static const std::vector<LabeledTable> table = [] {
    auto t = [](std::string label, Rows arrow, Rows tri) {
      return LabeledTable{std::move(label), FiniteEAS::from_rows(arrow, tri)};
    };
    return std::vector<LabeledTable>{
        t("A1", {{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}),
        t("A2", {{0, 0}, {0, 0}}, {{0, 0}, {1, 1}}),
        t("C1", {{0, 0}, {0, 1}}, {{0, 0}, {0, 0}}),
        t("C3", {{0, 0}, {0, 1}}, {{0, 0}, {1, 1}}),
        t("C5", {{0, 0}, {0, 1}}, {{1, 1}, {1, 1}}),
        t("C6", {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}),
        t("E'1-E'2", {{0, 0}, {1, 1}}, {{0, 0}, {0, 0}}),
        t("E'3", {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}),
        t("F1", {{0, 1}, {0, 1}}, {{0, 0}, {0, 0}}),
        t("F3", {{0, 1}, {0, 1}}, {{0, 0}, {1, 1}}),
        t("F4", {{0, 1}, {0, 1}}, {{0, 1}, {1, 0}}),
        t("H1", {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}),
        t("H2", {{0, 1}, {1, 0}}, {{0, 0}, {1, 1}}),
    };
  }();
  return table;
}

std::string cardinality_two_label(const FiniteEAS& e) {
  if (e.size() != 2) return {};
  const FiniteEAS canon = canonical_form(e);
  for (const auto& row : cardinality_two_table()) {
    if (canonical_form(row.eas) == canon) return row.label;
  }
  return {};
}

}  // namespace easlab
