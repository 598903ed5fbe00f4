// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "easlab/classify.hpp"
#include "easlab/eas.hpp"
#include "easlab/group.hpp"
#include "easlab/hopf.hpp"
#include "easlab/linear_eas.hpp"
#include "easlab/matrix.hpp"
#include "easlab/report.hpp"
#include "easlab/structure.hpp"

// JSON encodings. Every parser throws InputError on a schema violation.
// Rationals are written as strings "p" or "p/q"; parsers also accept JSON
// integers.
namespace easlab::io {

using json = nlohmann::json;

json read_file(const std::filesystem::path& path);
// The "kind" field, or empty when absent.
std::string kind_of(const json& j);

json to_json(const FiniteEAS& e);
FiniteEAS eas_from_json(const json& j);
json to_json(const FiniteEDS& d);
FiniteEDS eds_from_json(const json& j);
json to_json(const Congruence& c);
Congruence congruence_from_json(const json& j, std::size_t size);
json to_json(const Morphism& m);
Morphism morphism_from_json(const json& j);

json to_json(const Rational& q);
Rational rational_from_json(const json& j);
json to_json(const RatVector& v);
RatVector vector_from_json(const json& j);
// Comma-separated rationals, e.g. "1,-1/2".
RatVector vector_from_csv(const std::string& text);
// Array of rows; a {"rows": ...} object is accepted too.
json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

json to_json(const LinearEAS& l);
LinearEAS leas_from_json(const json& j);
json to_json(const GroupTable& g);
GroupTable group_from_json(const json& j);
json to_json(const Bialgebra& b);
Bialgebra bialgebra_from_json(const json& j);

json to_json(const AxiomReport& r);
json to_json(const CensusEntry& e);
json to_json(const DecompositionReport& r);
json to_json(const SpecialVectorSolution& s);
json to_json(const LeasInvariants& inv);

}  // namespace easlab::io
