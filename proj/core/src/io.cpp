// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "easlab/error.hpp"

namespace easlab::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t size_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<Element> index_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Element> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(static_cast<Element>(size_from_json(x, what)));
  return out;
}

// n x n table of indices, flattened row-major.
std::vector<Element> table_from_json(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw InputError(std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (const auto& row : j) {
    auto r = index_list(row, what);
    if (r.size() != n) throw InputError(std::string(what) + " rows must have " + std::to_string(n) + " entries");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return cells;
}

json table_to_json(const std::vector<Element>& cells, std::size_t n) {
  json rows = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    rows.push_back(std::vector<Element>(cells.begin() + a * n, cells.begin() + (a + 1) * n));
  }
  return rows;
}

void expect_kind(const json& j, const char* kind) {
  const std::string k = kind_of(j);
  if (!k.empty() && k != kind) throw InputError("expected kind \"" + std::string(kind) + "\", got \"" + k + "\"");
}

template <class F>
auto as_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const HypothesisError& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

}  // namespace

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string kind_of(const json& j) {
  if (!j.is_object()) return {};
  auto it = j.find("kind");
  if (it == j.end() || !it->is_string()) return {};
  return it->get<std::string>();
}

json to_json(const FiniteEAS& e) {
  return {{"kind", "eas"},
          {"size", e.size()},
          {"arrow", table_to_json(e.arrow_table(), e.size())},
          {"tri", table_to_json(e.tri_table(), e.size())}};
}

FiniteEAS eas_from_json(const json& j) {
  expect_kind(j, "eas");
  const std::size_t n = size_from_json(field(j, "size"), "size");
  return FiniteEAS(n, table_from_json(field(j, "arrow"), n, "arrow"), table_from_json(field(j, "tri"), n, "tri"));
}

json to_json(const FiniteEDS& d) {
  const std::size_t n = d.size();
  return {{"kind", "eds"},
          {"size", n},
          {"larrow", table_to_json(d.larrow_table(), n)},
          {"arrow", table_to_json(d.arrow_table(), n)},
          {"ltri", table_to_json(d.ltri_table(), n)},
          {"tri", table_to_json(d.tri_table(), n)}};
}

FiniteEDS eds_from_json(const json& j) {
  expect_kind(j, "eds");
  const std::size_t n = size_from_json(field(j, "size"), "size");
  return FiniteEDS(n, table_from_json(field(j, "larrow"), n, "larrow"), table_from_json(field(j, "arrow"), n, "arrow"),
                   table_from_json(field(j, "ltri"), n, "ltri"), table_from_json(field(j, "tri"), n, "tri"));
}

json to_json(const Congruence& c) {
  json blocks = json::array();
  for (const auto& b : c.blocks()) blocks.push_back(b);
  return {{"blocks", blocks}};
}

Congruence congruence_from_json(const json& j, std::size_t size) {
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw InputError("blocks must be an array");
  std::vector<std::vector<Element>> out;
  for (const auto& b : blocks) out.push_back(index_list(b, "block"));
  return Congruence::from_blocks(size, out);
}

json to_json(const Morphism& m) {
  return {{"kind", "morphism"}, {"source_size", m.source_size}, {"target_size", m.target_size}, {"map", m.map}};
}

Morphism morphism_from_json(const json& j) {
  expect_kind(j, "morphism");
  Morphism m{size_from_json(field(j, "source_size"), "source_size"),
             size_from_json(field(j, "target_size"), "target_size"), index_list(field(j, "map"), "map")};
  if (m.map.size() != m.source_size) throw InputError("map length differs from source_size");
  for (Element x : m.map) {
    if (x >= m.target_size) throw InputError("map value out of range");
  }
  return m;
}

json to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational::parse(std::to_string(j.get<long long>()));
  throw InputError("rational must be a string \"p/q\" or an integer");
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

RatVector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("vector must be an array");
  RatVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

RatVector vector_from_csv(const std::string& text) {
  RatVector v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in \"" + text + "\"");
    v.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  if (v.empty()) throw InputError("empty vector");
  return v;
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row_vector(r)));
  return rows;
}

RatMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? field(j, "rows") : j;
  if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a nonempty array of rows");
  std::vector<RatVector> out;
  for (const auto& r : rows) {
    out.push_back(vector_from_json(r));
    if (out.back().size() != out.front().size()) throw InputError("matrix rows have different lengths");
  }
  return RatMatrix::from_rows(out);
}

json to_json(const LinearEAS& l) { return {{"kind", "leas"}, {"dim", l.dim}, {"phi", to_json(l.phi)}}; }

LinearEAS leas_from_json(const json& j) {
  expect_kind(j, "leas");
  const std::size_t n = size_from_json(field(j, "dim"), "dim");
  return LinearEAS(n, matrix_from_json(field(j, "phi")));
}

json to_json(const GroupTable& g) {
  return {{"kind", "group"},
          {"size", g.size()},
          {"mul", table_to_json(g.table().cells(), g.size())},
          {"identity", g.identity()},
          {"inverse", g.inverse_table()},
          {"abelian", g.is_abelian()}};
}

GroupTable group_from_json(const json& j) {
  expect_kind(j, "group");
  const std::size_t n = size_from_json(field(j, "size"), "size");
  if (n == 0) throw InputError("group must be nonempty");
  auto cells = table_from_json(field(j, "mul"), n, "mul");
  for (Element x : cells) {
    if (x >= n) throw InputError("mul entry out of range");
  }
  return as_input([&] { return GroupTable(Magma(n, std::move(cells))); });
}

json to_json(const Bialgebra& b) {
  const std::size_t n = b.dim;
  json mult = json::array(), comult = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(to_json(b.product(i, k)));
    mult.push_back(row);
    comult.push_back(to_json(b.coproduct(i)));
  }
  json out = {{"kind", "bialgebra"}, {"dim", n}, {"mult", mult}, {"comult", comult}};
  out["unit"] = b.unit ? to_json(*b.unit) : json(nullptr);
  out["counit"] = b.counit ? to_json(*b.counit) : json(nullptr);
  out["antipode"] = b.antipode ? to_json(*b.antipode) : json(nullptr);
  return out;
}

Bialgebra bialgebra_from_json(const json& j) {
  expect_kind(j, "bialgebra");
  const std::size_t n = size_from_json(field(j, "dim"), "dim");
  if (n == 0) throw InputError("dim must be positive");
  const json& mj = field(j, "mult");
  const json& dj = field(j, "comult");
  if (!mj.is_array() || mj.size() != n || !dj.is_array() || dj.size() != n) {
    throw InputError("mult and comult must have dim entries");
  }
  RatMatrix m(n, n * n), d(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!mj[i].is_array() || mj[i].size() != n) throw InputError("mult rows must have dim entries");
    for (std::size_t k = 0; k < n; ++k) {
      const RatVector v = vector_from_json(mj[i][k]);
      if (v.size() != n) throw InputError("products must have dim coordinates");
      for (std::size_t r = 0; r < n; ++r) m(r, i * n + k) = v[r];
    }
    const RatMatrix c = matrix_from_json(dj[i]);
    if (c.rows() != n || c.cols() != n) throw InputError("coproducts must be dim x dim");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) d(p * n + q, i) = c(p, q);
    }
  }
  Bialgebra b(n, std::move(m), std::move(d));
  auto optional_field = [&](const char* name) -> const json* {
    auto it = j.find(name);
    return (it == j.end() || it->is_null()) ? nullptr : &*it;
  };
  if (const json* u = optional_field("unit")) {
    b.unit = vector_from_json(*u);
    if (b.unit->size() != n) throw InputError("unit must have dim coordinates");
  }
  if (const json* f = optional_field("counit")) {
    b.counit = vector_from_json(*f);
    if (b.counit->size() != n) throw InputError("counit must have dim coordinates");
  }
  if (const json* s = optional_field("antipode")) {
    b.antipode = matrix_from_json(*s);
    if (b.antipode->rows() != n || b.antipode->cols() != n) throw InputError("antipode must be dim x dim");
  }
  return b;
}

json to_json(const AxiomReport& r) {
  json laws = json::array();
  for (const auto& l : r.laws) {
    json entry = {{"law", l.law}, {"holds", l.holds}};
    if (!l.holds) entry["witness"] = l.witness;
    laws.push_back(entry);
  }
  return {{"subject", r.subject}, {"holds", r.holds()}, {"laws", laws}};
}

json to_json(const CensusEntry& e) {
  json out = {{"representative", to_json(e.representative)},
              {"ceds", e.is_ceds},
              {"dual_ceds", e.is_dual_ceds},
              {"nondegenerate", e.is_nondegenerate},
              {"orbit_size", e.orbit_size},
              {"description", e.description}};
  if (!e.label.empty()) out["label"] = e.label;
  return out;
}

json to_json(const DecompositionReport& r) {
  const bool ceds = r.form == DecompositionForm::ceds;
  json action = json::array();
  for (Element g = 0; g < r.group2.size(); ++g) {
    json row = json::array();
    for (Element a = 0; a < r.group1.size(); ++a) row.push_back(r.act(g, a));
    action.push_back(row);
  }
  json stages = json::array();
  for (const auto& [name, ok] : r.stages) stages.push_back({{"stage", name}, {"holds", ok}});
  return {{"kind", "decomposition"},
          {"form", ceds ? "ceds" : "dual_ceds"},
          {"carrier_order", ceds ? "(a1*n2 + a2)*n3 + a3" : "(a2*n1 + a1)*n3 + a3"},
          {"group1", to_json(r.group1)},
          {"group2", to_json(r.group2)},
          {"action", action},
          {"set_size", r.set_size},
          {"base_point", r.beta0},
          {"arrow_fixed", r.omega_arrow},
          {"tri_fixed", r.omega_tri},
          {"rebuilt", to_json(r.rebuilt)},
          {"theta", to_json(r.theta)},
          {"stages", stages}};
}

json to_json(const SpecialVectorSolution& s) {
  const char* kind = s.kind == SpecialVectorSolution::Kind::plane ? "plane"
                     : s.kind == SpecialVectorSolution::Kind::lines ? "lines"
                                                                   : "empty";
  json lines = json::array();
  for (const auto& v : s.lines) lines.push_back(to_json(v));
  return {{"eigenvalue", to_json(s.eigenvalue)}, {"kind", kind}, {"lines", lines}};
}

json to_json(const LeasInvariants& inv) {
  json out = {{"rank", inv.rank},
              {"trace", to_json(inv.trace)},
              {"fixed_space_dim", inv.fixed_space_dim},
              {"unit_dim", inv.unit_dim},
              {"counit_dim", inv.counit_dim}};
  if (inv.eigenvalue_one_lines) out["eigenvalue_one_lines"] = *inv.eigenvalue_one_lines;
  if (inv.eigenvalue_zero_lines) out["eigenvalue_zero_lines"] = *inv.eigenvalue_zero_lines;
  return out;
}

}  // namespace easlab::io
