// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace easlab {

using Element = std::uint32_t;
using Rows = std::vector<std::vector<Element>>;

// A single binary operation on {0..n-1}, stored row-major.
class Magma {
 public:
  Magma() = default;
  Magma(std::size_t size, std::vector<Element> cells);
  static Magma from_rows(const Rows& rows);

  std::size_t size() const noexcept { return n_; }
  Element operator()(Element a, Element b) const { return cells_[a * n_ + b]; }
  const std::vector<Element>& cells() const noexcept { return cells_; }
  Rows rows() const;

  // First (a,b,c) with (ab)c != a(bc), if any.
  std::optional<std::vector<std::size_t>> associativity_failure() const;
  bool is_associative() const { return !associativity_failure(); }
  // For all b, c there is exactly one a with a*b = c.
  bool has_unique_right_division() const;
  bool is_commutative() const;
  Magma opposite() const;

  friend auto operator<=>(const Magma&, const Magma&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

// Carrier {0..n-1} with the two operations a->b (arrow) and a|>b (tri).
class FiniteEAS {
 public:
  FiniteEAS(std::size_t size, std::vector<Element> arrow, std::vector<Element> tri);
  static FiniteEAS from_rows(const Rows& arrow, const Rows& tri);

  std::size_t size() const noexcept { return n_; }
  Element arrow(Element a, Element b) const { return arrow_[a * n_ + b]; }
  Element tri(Element a, Element b) const { return tri_[a * n_ + b]; }
  const std::vector<Element>& arrow_table() const noexcept { return arrow_; }
  const std::vector<Element>& tri_table() const noexcept { return tri_; }
  Rows arrow_rows() const;
  Rows tri_rows() const;
  Magma arrow_magma() const { return Magma(n_, arrow_); }
  Magma tri_magma() const { return Magma(n_, tri_); }

  // Orders by size, then arrow table, then tri table (row-major).
  friend auto operator<=>(const FiniteEAS&, const FiniteEAS&) = default;

 private:
  std::size_t n_;
  std::vector<Element> arrow_;
  std::vector<Element> tri_;
};

// Four-operation structure (<-, ->, <|, |>).
class FiniteEDS {
 public:
  FiniteEDS(std::size_t size, std::vector<Element> larrow, std::vector<Element> arrow,
            std::vector<Element> ltri, std::vector<Element> tri);

  std::size_t size() const noexcept { return n_; }
  Element larrow(Element a, Element b) const { return larrow_[a * n_ + b]; }
  Element arrow(Element a, Element b) const { return arrow_[a * n_ + b]; }
  Element ltri(Element a, Element b) const { return ltri_[a * n_ + b]; }
  Element tri(Element a, Element b) const { return tri_[a * n_ + b]; }
  const std::vector<Element>& larrow_table() const noexcept { return larrow_; }
  const std::vector<Element>& arrow_table() const noexcept { return arrow_; }
  const std::vector<Element>& ltri_table() const noexcept { return ltri_; }
  const std::vector<Element>& tri_table() const noexcept { return tri_; }

  friend bool operator==(const FiniteEDS&, const FiniteEDS&) = default;

 private:
  std::size_t n_;
  std::vector<Element> larrow_, arrow_, ltri_, tri_;
};

// (a,b) -> (a->b, a|>b), stored at index a*n+b.
struct PairMap {
  std::size_t size = 0;
  std::vector<std::pair<Element, Element>> image;

  std::pair<Element, Element> operator()(Element a, Element b) const { return image[a * size + b]; }
  bool is_bijective() const;
};

struct Morphism {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
  bool is_bijective() const;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Partition of {0..n-1}; blocks are numbered by their smallest element.
class Congruence {
 public:
  static Congruence from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks);
  static Congruence from_block_ids(const std::vector<std::size_t>& block_of);
  static Congruence discrete(std::size_t n);
  static Congruence full(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_of(Element a) const { return block_of_[a]; }
  const std::vector<std::vector<Element>>& blocks() const noexcept { return blocks_; }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<Element>> blocks_;
};

}  // namespace easlab
