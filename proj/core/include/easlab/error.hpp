// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace easlab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad table entries, mismatched dimensions, schema errors.
class InputError : public Error {
 public:
  using Error::Error;
};

// A hypothesis of an operation does not hold. Carries the failing stage and,
// when available, the element or basis indices that witness the failure.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string stage, std::string what,
                  std::vector<std::size_t> witness = {})
      : Error(stage + ": " + what), stage_(std::move(stage)),
        witness_(std::move(witness)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string stage_;
  std::vector<std::size_t> witness_;
};

}  // namespace easlab
