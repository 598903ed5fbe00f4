// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/eas.hpp"

#include <algorithm>
#include <string>

#include "easlab/error.hpp"
#include "easlab/report.hpp"

namespace easlab {

namespace {

void validate_table(std::size_t n, const std::vector<Element>& cells, const char* name) {
  if (n == 0) throw InputError("carrier must be nonempty");
  if (cells.size() != n * n) {
    throw InputError(std::string(name) + " table has " + std::to_string(cells.size()) +
                     " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] >= n) {
      throw InputError(std::string(name) + " entry (" + std::to_string(i / n) + "," +
                       std::to_string(i % n) + ") = " + std::to_string(cells[i]) +
                       " is out of range [0," + std::to_string(n) + ")");
    }
  }
}

std::vector<Element> flatten(const Rows& rows, const char* name) {
  const std::size_t n = rows.size();
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError(std::string(name) + " table is not square");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return cells;
}

Rows unflatten(std::size_t n, const std::vector<Element>& cells) {
  Rows rows(n);
  for (std::size_t a = 0; a < n; ++a) {
    rows[a].assign(cells.begin() + static_cast<std::ptrdiff_t>(a * n),
                   cells.begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
  }
  return rows;
}

}  // namespace

bool AxiomReport::holds() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawVerdict& v) { return v.holds; });
}

const LawVerdict* AxiomReport::first_failure() const {
  for (const auto& v : laws) {
    if (!v.holds) return &v;
  }
  return nullptr;
}

const LawVerdict* AxiomReport::find(const std::string& law) const {
  for (const auto& v : laws) {
    if (v.law == law) return &v;
  }
  return nullptr;
}

Magma::Magma(std::size_t size, std::vector<Element> cells) : n_(size), cells_(std::move(cells)) {
  validate_table(n_, cells_, "operation");
}

Magma Magma::from_rows(const Rows& rows) { return Magma(rows.size(), flatten(rows, "operation")); }

Rows Magma::rows() const { return unflatten(n_, cells_); }

std::optional<std::vector<std::size_t>> Magma::associativity_failure() const {
  const auto& m = *this;
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      for (Element c = 0; c < n_; ++c) {
        if (m(m(a, b), c) != m(a, m(b, c))) return std::vector<std::size_t>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

bool Magma::has_unique_right_division() const {
  for (Element b = 0; b < n_; ++b) {
    std::vector<bool> hit(n_, false);
    for (Element a = 0; a < n_; ++a) {
      Element c = (*this)(a, b);
      if (hit[c]) return false;
      hit[c] = true;
    }
  }
  return true;
}

bool Magma::is_commutative() const {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if ((*this)(a, b) != (*this)(b, a)) return false;
    }
  }
  return true;
}

Magma Magma::opposite() const {
  std::vector<Element> cells(n_ * n_);
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) cells[a * n_ + b] = (*this)(b, a);
  }
  return Magma(n_, std::move(cells));
}

FiniteEAS::FiniteEAS(std::size_t size, std::vector<Element> arrow, std::vector<Element> tri)
    : n_(size), arrow_(std::move(arrow)), tri_(std::move(tri)) {
  validate_table(n_, arrow_, "arrow");
  validate_table(n_, tri_, "tri");
}

FiniteEAS FiniteEAS::from_rows(const Rows& arrow, const Rows& tri) {
  if (arrow.size() != tri.size()) throw InputError("arrow and tri tables differ in size");
  return FiniteEAS(arrow.size(), flatten(arrow, "arrow"), flatten(tri, "tri"));
}

Rows FiniteEAS::arrow_rows() const { return unflatten(n_, arrow_); }
Rows FiniteEAS::tri_rows() const { return unflatten(n_, tri_); }

FiniteEDS::FiniteEDS(std::size_t size, std::vector<Element> larrow, std::vector<Element> arrow,
                     std::vector<Element> ltri, std::vector<Element> tri)
    : n_(size), larrow_(std::move(larrow)), arrow_(std::move(arrow)), ltri_(std::move(ltri)),
      tri_(std::move(tri)) {
  validate_table(n_, larrow_, "larrow");
  validate_table(n_, arrow_, "arrow");
  validate_table(n_, ltri_, "ltri");
  validate_table(n_, tri_, "tri");
}

bool PairMap::is_bijective() const {
  std::vector<bool> hit(size * size, false);
  for (const auto& [a, b] : image) {
    const std::size_t k = a * size + b;
    if (hit[k]) return false;
    hit[k] = true;
  }
  return true;
}

bool Morphism::is_bijective() const {
  if (source_size != target_size || map.size() != source_size) return false;
  std::vector<bool> hit(target_size, false);
  for (Element x : map) {
    if (x >= target_size || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

Congruence Congruence::from_block_ids(const std::vector<std::size_t>& ids) {
  if (ids.empty()) throw InputError("congruence on an empty carrier");
  // Renumber blocks by first occurrence so equal partitions compare equal.
  std::vector<std::size_t> renum(ids.size(), ids.size());
  Congruence c;
  c.block_of_.resize(ids.size());
  for (std::size_t a = 0; a < ids.size(); ++a) {
    if (ids[a] >= ids.size()) throw InputError("block id out of range");
    if (renum[ids[a]] == ids.size()) {
      renum[ids[a]] = c.blocks_.size();
      c.blocks_.emplace_back();
    }
    c.block_of_[a] = renum[ids[a]];
    c.blocks_[c.block_of_[a]].push_back(static_cast<Element>(a));
  }
  return c;
}

Congruence Congruence::from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
  std::vector<std::size_t> ids(n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("congruence block " + std::to_string(b) + " is empty");
    for (Element a : blocks[b]) {
      if (a >= n) throw InputError("congruence element " + std::to_string(a) + " out of range");
      if (ids[a] != n) throw InputError("element " + std::to_string(a) + " lies in two blocks");
      ids[a] = b;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (ids[a] == n) throw InputError("element " + std::to_string(a) + " is in no block");
  }
  return from_block_ids(ids);
}

Congruence Congruence::discrete(std::size_t n) {
  std::vector<std::size_t> ids(n);
  for (std::size_t a = 0; a < n; ++a) ids[a] = a;
  return from_block_ids(ids);
}

Congruence Congruence::full(std::size_t n) { return from_block_ids(std::vector<std::size_t>(n, 0)); }

}  // namespace easlab
