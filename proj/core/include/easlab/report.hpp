// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace easlab {

// Verdict for one law. On failure `witness` holds the lexicographically first
// counterexample (element indices for tables, basis indices for algebras).
struct LawVerdict {
  std::string law;
  bool holds = true;
  std::vector<std::size_t> witness;
};

struct AxiomReport {
  std::string subject;
  std::vector<LawVerdict> laws;

  bool holds() const;
  const LawVerdict* first_failure() const;
  const LawVerdict* find(const std::string& law) const;
};

}  // namespace easlab
