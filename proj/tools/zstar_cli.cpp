// Copyright 2026 The zstar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zstar/bundle.hpp"
#include "zstar/catalog.hpp"
#include "zstar/classification.hpp"
#include "zstar/diagram.hpp"
#include "zstar/errors.hpp"
#include "zstar/linrel.hpp"

namespace {

using zstar::ExactScalar;
using zstar::Morphism;

constexpr int kFailed = 1;
constexpr int kError = 2;

std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

// [[r0c0,r0c1],[r1c0,r1c1]] with no spaces.
std::string inline_matrix(const Morphism& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += compact(m.at(r, c).to_string());
    }
    out += "]";
  }
  return out + "]";
}

std::string describe_dualizer(const Morphism& d) {
  std::size_t n = d.dim();
  if (d == zstar::identity(n)) return "identity";
  if (n == 2 && d == Morphism::from_rows(2, 1, 1, {{ExactScalar(0), ExactScalar(1)}, {ExactScalar(1), ExactScalar(0)}})) {
    return "NOT";
  }
  ExactScalar k = d.at(0, 0);
  if (!k.is_zero() && d == zstar::scalar_morphism(n, k)) return compact(k.to_string()) + "*identity";
  if (n == 2 && !k.is_zero() && d == k * zstar::hadamard()) {
    if (k == ExactScalar::sqrt2().inv()) return "Hadamard";
    return compact(k.to_string()) + "*[[1,1],[1,-1]]";
  }
  return "other";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zstar::DomainError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Params {
  std::string a = "1";
  std::string b = "1";
  std::string convention = "appendix";
};

zstar::CalculusInstance resolve_calculus(const std::string& name, const Params& p) {
  ExactScalar a = ExactScalar::parse(p.a), b = ExactScalar::parse(p.b);
  if (p.convention != "appendix" && p.convention != "main") {
    throw zstar::DomainError("unknown convention '" + p.convention + "' (expected appendix or main)");
  }
  if (auto f = zstar::parse_family(name)) {
    auto conv = p.convention == "main" ? zstar::Convention::MainText : zstar::Convention::Appendix;
    return zstar::family_calculus({*f, a, b}, conv);
  }
  if (p.convention == "main") throw zstar::DomainError("--convention main applies only to families");
  return zstar::catalog_calculus(name, a, b);
}

void print_params(const std::string& name, const Params& p) {
  std::cout << "calculus=" << name << "\n";
  std::cout << "a=" << p.a << "\n";
  std::cout << "b=" << p.b << "\n";
  std::cout << "convention=" << p.convention << "\n";
}

int cmd_verify(const std::string& name, const Params& p) {
  zstar::CalculusInstance calc = resolve_calculus(name, p);
  zstar::LawReport report = zstar::check_zstar(calc.zstar);
  std::size_t failed = 0;
  std::cout << "Z*-algebra axioms for " << calc.name << " (a=" << p.a << ", b=" << p.b << ")\n";
  for (const auto& r : report.results()) {
    if (!r.passed) ++failed;
    std::cout << "  " << (r.passed ? "pass  " : "FAIL  ") << r.law << "\n";
  }
  const Morphism& d = calc.zstar.dualizer();
  std::cout << "dualizer (" << describe_dualizer(d) << "):\n" << d.to_text() << "\n";
  std::cout << "--\n";
  std::cout << "command=verify\n";
  print_params(name, p);
  std::cout << "laws=" << report.results().size() << "\n";
  std::cout << "failed=" << failed << "\n";
  std::cout << "dualizer=" << inline_matrix(d) << "\n";
  std::cout << "dualizer_kind=" << describe_dualizer(d) << "\n";
  std::cout << "result=" << (failed == 0 ? "pass" : "fail") << "\n";
  return failed == 0 ? 0 : kFailed;
}

std::string golden_path(const std::string& option) {
  if (!option.empty()) return option;
  if (const char* dir = std::getenv("ZSTAR_GOLDEN_DIR")) {
    return (std::filesystem::path(dir) / "bigebra_deltaZ.txt").string();
  }
  return {};
}

int cmd_classify_qubits(const std::string& golden_option) {
  zstar::BigebraEnumeration e = zstar::enumerate_bigebra_pairs_deltaZ();
  std::string trace = e.trace();
  std::cout << trace;
  bool pairs_ok = e.pair_checks.all_passed();
  std::string golden = golden_path(golden_option);
  std::optional<bool> golden_ok;
  if (!golden.empty()) golden_ok = read_file(golden) == trace;
  std::cout << "--\n";
  std::cout << "command=classify-qubits\n";
  std::cout << "candidates=" << e.candidates.size() << "\n";
  std::cout << "solutions=" << e.solutions.size() << "\n";
  std::cout << "rank2=" << e.rank2.size() << "\n";
  std::cout << "orbits=" << e.orbits.size() << "\n";
  std::cout << "algebras=" << e.algebras.size() << "\n";
  std::cout << "rejected=" << e.rejected.size() << "\n";
  std::cout << "pairs=" << e.pairs.size() << "\n";
  std::cout << "pair_checks=" << (pairs_ok ? "pass" : "fail") << "\n";
  if (golden_ok) {
    std::cout << "golden=" << golden << "\n";
    std::cout << "golden_match=" << (*golden_ok ? "yes" : "no") << "\n";
  }
  bool ok = pairs_ok && golden_ok.value_or(true);
  std::cout << "result=" << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : kFailed;
}

int cmd_classify_linrel(std::uint32_t prime) {
  zstar::linrel::PrimeSummary s = zstar::linrel::classify_prime(prime);
  std::cout << zstar::linrel::summary_text(s);
  bool phases_trivial = true;
  for (const auto& [name, trivial] : s.phase_group_trivial) phases_trivial = phases_trivial && trivial;
  std::size_t algebras = 0;
  std::cout << "--\n";
  std::cout << "command=classify-linrel\n";
  std::cout << "prime=" << s.prime << "\n";
  std::cout << "subspaces_k1=" << s.subspaces_k1 << "\n";
  std::cout << "subspaces_k2=" << s.subspaces_k2 << "\n";
  std::cout << "subspaces_k3=" << s.subspaces_k3 << "\n";
  std::cout << "monoids=" << s.monoids.size() << "\n";
  std::cout << "monoids_are_n_and_b=" << (s.monoids_are_n_and_b ? "yes" : "no") << "\n";
  std::cout << "phase_groups_trivial=" << (phases_trivial ? "yes" : "no") << "\n";
  std::cout << "non_isomorphic=" << (s.non_isomorphic ? "yes" : "no") << "\n";
  for (const auto& [name, report] : s.zstar) {
    bool ok = report.all_passed();
    if (ok) ++algebras;
    std::cout << "zstar_" << name << "=" << (ok ? "pass" : "fail") << "\n";
  }
  std::cout << "zstar_algebras=" << algebras << "\n";
  bool ok = s.monoids_are_n_and_b && phases_trivial && s.non_isomorphic && algebras == s.zstar.size();
  std::cout << "result=" << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : kFailed;
}

zstar::Diagram load_diagram(const std::string& path) {
  try {
    return zstar::Diagram::parse(read_file(path));
  } catch (const zstar::ParseError& e) {
    throw zstar::ParseError(0, path + ": " + e.what());
  }
}

int cmd_eval(const std::string& file, const std::string& name, const Params& p,
             const std::string& expect) {
  zstar::Diagram d = load_diagram(file);
  zstar::CalculusInstance calc = resolve_calculus(name, p);
  Morphism m = zstar::evaluate(d, calc);
  std::cout << m.to_text() << "\n";
  std::optional<bool> equal;
  if (!expect.empty()) equal = zstar::evaluate(load_diagram(expect), calc) == m;
  std::cout << "--\n";
  std::cout << "command=eval-diagram\n";
  std::cout << "file=" << file << "\n";
  print_params(name, p);
  std::cout << "inputs=" << d.inputs() << "\n";
  std::cout << "outputs=" << d.outputs() << "\n";
  std::cout << "nodes=" << d.nodes().size() << "\n";
  std::cout << "edges=" << d.edges().size() << "\n";
  std::cout << "matrix=" << inline_matrix(m) << "\n";
  if (equal) {
    std::cout << "expect=" << expect << "\n";
    std::cout << "equal=" << (*equal ? "yes" : "no") << "\n";
  }
  bool ok = equal.value_or(true);
  std::cout << "result=" << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : kFailed;
}

int cmd_catalog_list() {
  std::vector<std::string> names = zstar::catalog_names();
  for (const auto& n : names) {
    std::string title;
    for (const auto& t : zstar::appendix_tables()) {
      if (t.name == n) title = t.title;
    }
    std::cout << "  " << n;
    if (!title.empty()) std::cout << "  " << title;
    std::cout << "\n";
  }
  std::cout << "--\n";
  std::cout << "command=catalog-list\n";
  std::cout << "count=" << names.size() << "\n";
  std::cout << "result=pass\n";
  return 0;
}

int cmd_catalog_dump(const std::string& name, const Params& p, const std::string& out) {
  zstar::CalculusInstance calc = resolve_calculus(name, p);
  for (const auto& [key, m] : calc.generator_table) std::cout << key << ":\n" << m.to_text() << "\n";
  std::optional<std::filesystem::path> manifest;
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    manifest = zstar::write_bundle(out, zstar::to_bundle(calc.name, calc.zstar));
  }
  std::cout << "--\n";
  std::cout << "command=catalog-dump\n";
  print_params(name, p);
  std::cout << "generators=" << calc.generator_table.size() << "\n";
  if (manifest) std::cout << "manifest=" << manifest->string() << "\n";
  std::cout << "result=pass\n";
  return 0;
}

void add_params(CLI::App* cmd, Params& p) {
  cmd->add_option("--a", p.a, "first parameter (exact scalar, e.g. 1/2, r2, i)");
  cmd->add_option("--b", p.b, "second parameter (exact scalar)");
  cmd->add_option("--convention", p.convention, "parameterization of families: appendix or main")
      ->check(CLI::IsMember({"appendix", "main"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Z*-algebras and evaluation of spider diagrams"};
  app.require_subcommand(1);

  Params params;
  std::string name, file, golden, expect, out;
  std::uint32_t prime = 2;

  auto* verify = app.add_subcommand("verify", "check every Z*-algebra axiom of a catalog calculus");
  verify->add_option("name", name, "family or table name (see 'catalog list')")->required();
  add_params(verify, params);

  auto* classify = app.add_subcommand("classify", "run a classification");
  classify->require_subcommand(1);
  auto* qubits = classify->add_subcommand("qubits", "bigebra pairs with the copy coproduct on qubits");
  qubits->add_option("--golden", golden, "golden trace to compare against (default: $ZSTAR_GOLDEN_DIR)");
  auto* linrel = classify->add_subcommand("linrel", "monoids and Z*-algebras in LinRel over GF(p)");
  linrel->add_option("--prime", prime, "field characteristic (2, 3 or 5)");

  auto* eval = app.add_subcommand("eval-diagram", "evaluate a diagram file to a matrix");
  eval->add_option("file", file, "diagram file")->required();
  eval->add_option("--calculus", name, "family or table name (default ZW.orig)");
  eval->add_option("--expect", expect, "second diagram that must evaluate to the same matrix");
  add_params(eval, params);

  auto* catalog = app.add_subcommand("catalog", "inspect the calculus catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog names");
  auto* dump = catalog->add_subcommand("dump", "print the generator matrices of a calculus");
  dump->add_option("name", name, "family or table name")->required();
  dump->add_option("--out", out, "also write a structure bundle to this directory");
  add_params(dump, params);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(name, params);
    if (*qubits) return cmd_classify_qubits(golden);
    if (*linrel) return cmd_classify_linrel(prime);
    if (*eval) return cmd_eval(file, name.empty() ? "ZW.orig" : name, params, expect);
    if (*list) return cmd_catalog_list();
    if (*dump) return cmd_catalog_dump(name, params, out);
  } catch (const zstar::Error& e) {
    std::cout << "--\n";
    std::cout << "result=error\n";
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
