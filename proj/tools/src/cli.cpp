// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "easlab/axioms.hpp"
#include "easlab/classify.hpp"
#include "easlab/error.hpp"
#include "easlab/hopf.hpp"
#include "easlab/io.hpp"
#include "easlab/isomorphism.hpp"
#include "easlab/linear_eas.hpp"
#include "easlab/structure.hpp"

namespace easlab::cli {
namespace {

using io::json;

struct Context {
  std::ostream& out;
  bool as_json = false;
};

std::string verdict(bool holds) { return holds ? "holds" : "FAILS"; }

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string vector_text(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

void print_matrix(std::ostream& out, const RatMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).to_string());
      width = std::max(width, cells.back().size());
    }
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << std::setw(int(width)) << cells[i * m.cols() + j];
    out << '\n';
  }
}

void print_table(std::ostream& out, const char* name, const std::vector<Element>& cells, std::size_t n) {
  out << name << ":\n";
  for (std::size_t a = 0; a < n; ++a) {
    out << " ";
    for (std::size_t b = 0; b < n; ++b) out << ' ' << cells[a * n + b];
    out << '\n';
  }
}

void print_report(std::ostream& out, const AxiomReport& r) {
  std::size_t width = 4;
  for (const auto& l : r.laws) width = std::max(width, l.law.size());
  out << "subject: " << r.subject << '\n';
  for (const auto& l : r.laws) {
    out << "  " << std::left << std::setw(int(width)) << l.law << std::right << "  " << verdict(l.holds);
    if (!l.holds && !l.witness.empty()) out << "  witness (" << join(l.witness) << ")";
    out << '\n';
  }
  out << "result: " << verdict(r.holds()) << '\n';
}

void emit(const Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << j.dump(2) << '\n';
}

// Inline CSV, or the contents of a file when the argument names one.
RatVector read_csv_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream f(arg);
    std::stringstream buf;
    buf << f.rdbuf();
    return io::vector_from_csv(buf.str());
  }
  return io::vector_from_csv(arg);
}

Rational parse_rational(const std::string& text) { return io::rational_from_json(json(text)); }

LinearEAS load_linear(const json& j) {
  if (io::kind_of(j) == "eas") return linearize(io::eas_from_json(j));
  return io::leas_from_json(j);
}

// Group tables that fail the group axioms are a verdict, not an input error.
AxiomReport check_group_file(const json& j) {
  AxiomReport r;
  r.subject = "group";
  const auto& mul = j.at("mul");
  const std::size_t n = j.at("size").get<std::size_t>();
  if (n == 0 || !mul.is_array() || mul.size() != n) throw InputError("group table shape mismatch");
  std::vector<Element> cells;
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != n) throw InputError("group table shape mismatch");
    for (const auto& x : row) {
      const auto v = x.get<std::size_t>();
      if (v >= n) throw InputError("mul entry out of range");
      cells.push_back(static_cast<Element>(v));
    }
  }
  try {
    GroupTable g{Magma(n, cells)};
    r.laws.push_back({"group axioms", true, {}});
  } catch (const HypothesisError& e) {
    r.laws.push_back({e.what(), false, e.witness()});
  }
  return r;
}

int verify(const Context& ctx, const std::string& path, std::string kind) {
  const json j = io::read_file(path);
  const std::string file_kind = io::kind_of(j);
  if (kind == "auto") kind = file_kind;
  if (kind.empty()) throw InputError(path + ": missing \"kind\" field");

  AxiomReport report;
  if (kind == "eas" || kind == "ceds" || kind == "dual-ceds") {
    const FiniteEAS e = io::eas_from_json(j);
    report = kind == "eas" ? check_eas(e) : kind == "ceds" ? check_ceds(e) : check_dual_ceds(e);
  } else if (kind == "eds") {
    report = check_eds(io::eds_from_json(j));
  } else if (kind == "leas" || kind == "lceds" || kind == "dual-lceds") {
    const LinearEAS l = load_linear(j);
    report = kind == "leas" ? check_leas(l) : kind == "lceds" ? check_lceds(l) : check_dual_lceds(l);
  } else if (kind == "bialgebra") {
    report = check_bialgebra(io::bialgebra_from_json(j));
  } else if (kind == "hopf") {
    report = check_hopf(io::bialgebra_from_json(j));
  } else if (kind == "group") {
    try {
      report = check_group_file(j);
    } catch (const json::exception& e) {
      throw InputError(e.what());
    }
  } else {
    throw InputError("unknown kind \"" + kind + "\"");
  }

  if (ctx.as_json) {
    emit(ctx, {{"command", "verify"}, {"kind", kind}, {"report", io::to_json(report)}});
  } else {
    print_report(ctx.out, report);
  }
  return report.holds() ? kHolds : kFails;
}

int classify(const Context& ctx, std::size_t size, const EnumerationFilter& filter, std::size_t jobs,
             const std::string& out_path, bool allow_large) {
  const auto census = classify_up_to_iso(size, filter, jobs == 0 ? 1 : jobs, allow_large);
  json entries = json::array();
  for (const auto& c : census) entries.push_back(io::to_json(c));
  if (!out_path.empty()) write_json_file(out_path, entries);

  if (ctx.as_json) {
    emit(ctx, entries);
    return kHolds;
  }
  ctx.out << census.size() << " isomorphism classes of size " << size << '\n';
  ctx.out << "  #  label     ceds  dual  nondeg  orbit  description\n";
  for (std::size_t i = 0; i < census.size(); ++i) {
    const auto& c = census[i];
    ctx.out << std::setw(3) << i + 1 << "  " << std::left << std::setw(8)
            << (c.label.empty() ? "-" : c.label) << std::right << "  " << std::setw(4)
            << (c.is_ceds ? "yes" : "no") << "  " << std::setw(4) << (c.is_dual_ceds ? "yes" : "no")
            << "  " << std::setw(6) << (c.is_nondegenerate ? "yes" : "no") << "  " << std::setw(5)
            << c.orbit_size << "  " << c.description << '\n';
  }
  return kHolds;
}

int decompose(const Context& ctx, const std::string& path, bool dual, const std::string& out_path) {
  const FiniteEAS e = io::eas_from_json(io::read_file(path));
  DecompositionReport r;
  try {
    r = dual ? decompose_dual(e) : ceds_decompose(e);
  } catch (const HypothesisError& err) {
    if (ctx.as_json) {
      emit(ctx, {{"command", "decompose"},
                 {"holds", false},
                 {"stage", err.stage()},
                 {"reason", err.what()},
                 {"witness", err.witness()}});
    } else {
      ctx.out << "decomposition failed at stage \"" << err.stage() << "\": " << err.what();
      if (!err.witness().empty()) ctx.out << "  witness (" << join(err.witness()) << ")";
      ctx.out << '\n';
    }
    return kFails;
  }
  const json j = io::to_json(r);
  if (!out_path.empty()) write_json_file(out_path, j);
  if (ctx.as_json) {
    emit(ctx, j);
    return kHolds;
  }
  ctx.out << (dual ? "dual CEDS" : "CEDS") << " decomposition of a carrier of size " << e.size() << '\n';
  ctx.out << "component sizes: " << r.group1.size() << " x " << r.group2.size() << " x " << r.set_size
          << '\n';
  ctx.out << "first group abelian: " << (r.group1.is_abelian() ? "yes" : "no") << '\n';
  ctx.out << "base point: " << r.beta0 << '\n';
  print_table(ctx.out, "first group", r.group1.table().cells(), r.group1.size());
  print_table(ctx.out, "second group", r.group2.table().cells(), r.group2.size());
  ctx.out << "action (row g, column a):\n";
  for (std::size_t g = 0; g < r.group2.size(); ++g) {
    ctx.out << " ";
    for (std::size_t a = 0; a < r.group1.size(); ++a) ctx.out << ' ' << r.act(Element(g), Element(a));
    ctx.out << '\n';
  }
  ctx.out << "isomorphism from the rebuilt structure:";
  for (Element x : r.theta.map) ctx.out << ' ' << x;
  ctx.out << '\n';
  for (const auto& [stage, ok] : r.stages) ctx.out << "  " << stage << ": " << verdict(ok) << '\n';
  return kHolds;
}

int linearize_cmd(const Context& ctx, const std::string& path) {
  const LinearEAS l = linearize(io::eas_from_json(io::read_file(path)));
  if (ctx.as_json) {
    emit(ctx, io::to_json(l));
  } else {
    ctx.out << "dimension " << l.dim << ", matrix of size " << l.phi.rows() << "x" << l.phi.cols() << '\n';
    print_matrix(ctx.out, l.phi);
  }
  return kHolds;
}

void print_solution(std::ostream& out, const SpecialVectorSolution& s) {
  out << "eigenvalue " << s.eigenvalue.to_string() << ": ";
  switch (s.kind) {
    case SpecialVectorSolution::Kind::empty: out << "none\n"; return;
    case SpecialVectorSolution::Kind::plane: out << "every vector\n"; return;
    case SpecialVectorSolution::Kind::lines: break;
  }
  for (std::size_t i = 0; i < s.lines.size(); ++i) out << (i ? ", " : "") << vector_text(s.lines[i]);
  out << '\n';
}

int special(const Context& ctx, const std::string& path, const std::string& eigen_text,
            const std::string& vector_arg) {
  const LinearEAS l = load_linear(io::read_file(path));
  if (!vector_arg.empty()) {
    const RatVector v = read_csv_argument(vector_arg);
    if (v.size() != l.dim) throw InputError("vector has the wrong dimension");
    std::vector<Rational> candidates;
    if (eigen_text.empty()) {
      candidates = {Rational(1), Rational(0)};
    } else {
      candidates = {parse_rational(eigen_text)};
    }
    json found = nullptr;
    for (const auto& c : candidates) {
      if (is_special_vector(l, v, c)) {
        found = io::to_json(c);
        break;
      }
    }
    if (ctx.as_json) {
      emit(ctx, {{"command", "special"}, {"vector", io::to_json(v)}, {"special", !found.is_null()},
                 {"eigenvalue", found}});
    } else {
      ctx.out << vector_text(v) << (found.is_null() ? " is not special" : " is special of eigenvalue " +
                                                                              found.get<std::string>())
              << '\n';
    }
    return found.is_null() ? kFails : kHolds;
  }

  if (l.dim != 2) throw InputError("special-vector solving is limited to dimension 2; pass --vector to verify");
  std::vector<SpecialVectorSolution> sols;
  if (eigen_text.empty()) {
    const SpecialLines lines = special_lines_dim2(l);
    sols = {lines.one, lines.zero};
  } else {
    sols = {special_lines_dim2(l, parse_rational(eigen_text))};
  }
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& s : sols) arr.push_back(io::to_json(s));
    emit(ctx, {{"command", "special"}, {"solutions", arr}});
  } else {
    for (const auto& s : sols) print_solution(ctx.out, s);
  }
  return kHolds;
}

int basis_cmd(const Context& ctx, const std::string& path, bool units) {
  const LinearEAS l = load_linear(io::read_file(path));
  const auto basis = units ? left_units(l) : left_counits(l);
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& v : basis) arr.push_back(io::to_json(v));
    emit(ctx, {{"command", units ? "units" : "counits"}, {"dim", basis.size()}, {"basis", arr}});
  } else {
    ctx.out << (units ? "left units" : "left counits") << ": dimension " << basis.size() << '\n';
    for (const auto& v : basis) ctx.out << "  " << vector_text(v) << '\n';
  }
  return kHolds;
}

int iso(const Context& ctx, const std::string& path1, const std::string& path2, const std::string& witness) {
  const json j1 = io::read_file(path1), j2 = io::read_file(path2);
  const bool finite = io::kind_of(j1) == "eas" && io::kind_of(j2) == "eas";
  bool holds = false;
  json result = {{"command", "iso"}};

  const json w = witness.empty() ? json(nullptr) : io::read_file(witness);
  if (finite && w.is_null()) {
    const auto m = is_isomorphic(io::eas_from_json(j1), io::eas_from_json(j2));
    holds = m.has_value();
    result["isomorphism"] = m ? io::to_json(*m) : json(nullptr);
  } else if (finite && io::kind_of(w) == "morphism") {
    holds = is_isomorphism(io::morphism_from_json(w), io::eas_from_json(j1), io::eas_from_json(j2));
  } else {
    // Finite structures with a matrix witness are compared after linearizing.
    if (w.is_null()) throw InputError("linear isomorphism checking needs --witness");
    holds = check_leas_iso(load_linear(j1), load_linear(j2), io::matrix_from_json(w));
  }
  result["holds"] = holds;
  if (ctx.as_json) {
    emit(ctx, result);
  } else {
    ctx.out << "isomorphic: " << (holds ? "yes" : "no") << '\n';
    if (result.contains("isomorphism") && holds) {
      ctx.out << "map:";
      for (const auto& x : result["isomorphism"]["map"]) ctx.out << ' ' << x.get<std::size_t>();
      ctx.out << '\n';
    }
  }
  return holds ? kHolds : kFails;
}

int hopf_group(const Context& ctx, const std::string& path, bool dual, const std::string& variant) {
  const GroupTable g = io::group_from_json(io::read_file(path));
  const Bialgebra b = dual ? dual_group_bialgebra(g) : group_bialgebra(g);
  const AxiomReport hopf = check_hopf(b);
  if (!hopf.holds()) {
    if (ctx.as_json) {
      emit(ctx, {{"command", "hopf-group"}, {"hopf", io::to_json(hopf)}});
    } else {
      print_report(ctx.out, hopf);
    }
    return kFails;
  }
  const LinearEAS l = variant == "eas" ? leas_from_bialgebra(b) : leas_prime_from_hopf(b);
  const AxiomReport braid = check_leas(l);
  if (ctx.as_json) {
    emit(ctx, {{"command", "hopf-group"},
               {"variant", variant},
               {"bialgebra", io::to_json(b)},
               {"hopf", io::to_json(hopf)},
               {"leas", io::to_json(l)},
               {"braid", io::to_json(braid)}});
  } else {
    print_report(ctx.out, hopf);
    print_report(ctx.out, braid);
    ctx.out << "linear structure (" << variant << "):\n";
    print_matrix(ctx.out, l.phi);
  }
  return braid.holds() ? kHolds : kFails;
}

int reconstruct(const Context& ctx, const std::string& path, const std::string& unit, const std::string& counit) {
  const LinearEAS l = load_linear(io::read_file(path));
  const RatVector a = read_csv_argument(unit), eps = read_csv_argument(counit);
  if (a.size() != l.dim || eps.size() != l.dim) throw InputError("unit and counit must have dimension " + std::to_string(l.dim));
  Bialgebra b;
  try {
    b = reconstruct_bialgebra(l, a, eps);
  } catch (const HypothesisError& err) {
    if (ctx.as_json) {
      emit(ctx, {{"command", "reconstruct"},
                 {"holds", false},
                 {"stage", err.stage()},
                 {"reason", err.what()},
                 {"witness", err.witness()}});
    } else {
      ctx.out << "reconstruction failed: " << err.what() << '\n';
    }
    return kFails;
  }
  const AxiomReport report = check_bialgebra(b, UnitSides::left_only);
  if (ctx.as_json) {
    emit(ctx, {{"command", "reconstruct"}, {"bialgebra", io::to_json(b)}, {"report", io::to_json(report)}});
  } else {
    ctx.out << "multiplication (column i*n+j holds e_i e_j):\n";
    print_matrix(ctx.out, b.mult);
    ctx.out << "comultiplication (column i holds the coproduct of e_i):\n";
    print_matrix(ctx.out, b.comult);
    print_report(ctx.out, report);
  }
  return report.holds() ? kHolds : kFails;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("EASLAB_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended associative semigroups: verification, classification and structure"};
  app.name("easlab");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print machine-readable JSON");

  std::string file, file2, kind = "auto", out_path, witness, eigenvalue, vector_arg, unit, counit;
  std::string variant = "eas";
  std::size_t size = 0, jobs = default_jobs();
  bool dual = false, allow_large = false;
  EnumerationFilter filter;

  auto* verify_cmd = app.add_subcommand("verify", "Check the axioms of a structure");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--kind", kind)->check(CLI::IsMember(
      {"auto", "eas", "ceds", "dual-ceds", "eds", "leas", "lceds", "dual-lceds", "bialgebra", "hopf", "group"}));

  auto* classify_cmd = app.add_subcommand("classify", "Enumerate isomorphism classes");
  classify_cmd->add_option("--size", size)->required()->check(CLI::Range(1, 16));
  classify_cmd->add_flag("--nondegenerate", filter.nondegenerate);
  classify_cmd->add_flag("--ceds", filter.ceds);
  classify_cmd->add_flag("--dual-ceds", filter.dual_ceds);
  classify_cmd->add_option("--jobs", jobs, "Worker threads (default EASLAB_JOBS or 1)");
  classify_cmd->add_option("--out", out_path);
  classify_cmd->add_flag("--allow-large", allow_large);

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a nondegenerate CEDS into components");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_flag("--dual", dual);
  decompose_cmd->add_option("--out", out_path);

  auto* linearize_cmd_ = app.add_subcommand("linearize", "Print the linear structure of a finite EAS");
  linearize_cmd_->add_option("file", file)->required();

  auto* special_cmd = app.add_subcommand("special", "Special vectors of a linear structure");
  special_cmd->add_option("file", file)->required();
  special_cmd->add_option("--eigenvalue", eigenvalue);
  special_cmd->add_option("--vector", vector_arg, "Comma-separated coordinates or a CSV file");

  auto* units_cmd = app.add_subcommand("units", "Basis of the left units");
  units_cmd->add_option("file", file)->required();
  auto* counits_cmd = app.add_subcommand("counits", "Basis of the left counits");
  counits_cmd->add_option("file", file)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Check or search for an isomorphism");
  iso_cmd->add_option("first", file)->required();
  iso_cmd->add_option("second", file2)->required();
  iso_cmd->add_option("--witness", witness);

  auto* hopf_cmd = app.add_subcommand("hopf-group", "Group (or dual group) bialgebra and its linear structure");
  hopf_cmd->add_option("file", file)->required();
  hopf_cmd->add_flag("--dual", dual);
  hopf_cmd->add_option("--variant", variant)->check(CLI::IsMember({"eas", "eas-prime"}));

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Bialgebra from a left unit and left counit");
  reconstruct_cmd->add_option("file", file)->required();
  reconstruct_cmd->add_option("--unit", unit)->required();
  reconstruct_cmd->add_option("--counit", counit)->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", as_json, "Print machine-readable JSON");
  }

  std::vector<const char*> argv{"easlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kInputError;
  }

  const Context ctx{out, as_json};
  try {
    if (verify_cmd->parsed()) return verify(ctx, file, kind);
    if (classify_cmd->parsed()) return classify(ctx, size, filter, jobs, out_path, allow_large);
    if (decompose_cmd->parsed()) return decompose(ctx, file, dual, out_path);
    if (linearize_cmd_->parsed()) return linearize_cmd(ctx, file);
    if (special_cmd->parsed()) return special(ctx, file, eigenvalue, vector_arg);
    if (units_cmd->parsed()) return basis_cmd(ctx, file, true);
    if (counits_cmd->parsed()) return basis_cmd(ctx, file, false);
    if (iso_cmd->parsed()) return iso(ctx, file, file2, witness);
    if (hopf_cmd->parsed()) return hopf_group(ctx, file, dual, variant);
    if (reconstruct_cmd->parsed()) return reconstruct(ctx, file, unit, counit);
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kFails;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace easlab::cli
