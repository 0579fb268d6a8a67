// Copyright 2026 The pauligl Authors
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

#include "pauligl_cli/dispatch.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pauligl/pauligl.hpp"
#include "pauligl_cli/formats.hpp"
#include "pauligl_cli/verify_suite.hpp"

namespace pauligl::cli {

namespace {

/** Unreadable paths and bad options are usage errors, not data errors. */
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads the whole input (a path or "-") so parse errors can name the file.
template <typename Reader>
auto read_input(const std::string& path, std::istream& stdin_stream,
                Reader reader) {
  try {
    if (path == "-") return reader(stdin_stream);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open \"" + path + "\"");
    return reader(file);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()));
  }
}

CoefficientTensor load_coefficients(const std::string& path, std::istream& in) {
  return read_input(path, in,
                    [](std::istream& s) { return read_coefficients(s); });
}

double parse_tolerance(const std::string& text, const std::string& source) {
  try {
    const double tol = parse_real(text, 0);
    if (tol < 0.0) throw UsageError(source + " must be non-negative");
    return tol;
  } catch (const ParseError&) {
    throw UsageError(source + " is not a decimal number: \"" + text + "\"");
  }
}

std::vector<std::size_t> parse_shape(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw UsageError("invalid --shape entry \"" + part + "\"");
    }
    sizes.push_back(value);
  }
  if (sizes.empty()) throw UsageError("--shape is empty");
  return sizes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err,
        const std::optional<std::string>& tolerance_override) {
  CLI::App app{"Pauli Kronecker-basis parameterization of 2^m x 2^m matrices",
               args.empty() ? "pauligl" : args.front()};
  app.require_subcommand(1);

  std::string tol_text;
  std::string path_a;
  std::string path_b;
  std::string method = "general";
  bool want_symmetric = false;
  bool want_antisymmetric = false;
  std::string shape_text;
  std::vector<std::size_t> indices;
  std::uint64_t seed = 0;

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Matrix file -> coefficient file");
  decompose_cmd->add_option("matrix", path_a, "Matrix file or -")->required();
  decompose_cmd->add_option("--tol", tol_text, "Pruning tolerance");

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Coefficient file -> matrix file");
  reconstruct_cmd->add_option("coefficients", path_a)->required();

  auto* compose_cmd =
      app.add_subcommand("compose", "Product of two coefficient files");
  compose_cmd->add_option("a", path_a)->required();
  compose_cmd->add_option("b", path_b)->required();
  compose_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"general", "gl4", "antisym-gl4"}));

  auto* transpose_cmd =
      app.add_subcommand("transpose", "Coefficients of the transpose");
  transpose_cmd->add_option("coefficients", path_a)->required();

  auto* classify_cmd = app.add_subcommand(
      "classify", "Symmetry of each basis element and an overall verdict");
  classify_cmd->add_option("coefficients", path_a)->required();

  auto* project_cmd = app.add_subcommand(
      "project", "Symmetric or antisymmetric part of a coefficient file");
  auto* sym_flag = project_cmd->add_flag("--symmetric", want_symmetric);
  auto* anti_flag = project_cmd->add_flag("--antisymmetric", want_antisymmetric);
  sym_flag->excludes(anti_flag);
  project_cmd->add_option("coefficients", path_a)->required();

  auto* qvec_cmd = app.add_subcommand("qvec", "Complex-vector form of 4x4 antisymmetric matrices");
  qvec_cmd->require_subcommand(1);
  auto* qvec_to = qvec_cmd->add_subcommand("to-coef", "Q-vector file -> coefficient file");
  qvec_to->add_option("qvector", path_a)->required();
  auto* qvec_from = qvec_cmd->add_subcommand("from-coef", "Coefficient file -> q-vector file");
  qvec_from->add_option("coefficients", path_a)->required();

  auto* index_cmd = app.add_subcommand("index", "Mixed-radix index maps (0-based)");
  index_cmd->require_subcommand(1);
  auto* to_global = index_cmd->add_subcommand("to-global", "Local indices -> global index");
  to_global->add_option("--shape", shape_text, "Factor sizes, e.g. 2,3")->required();
  to_global->add_option("indices", indices)->required();
  auto* to_local = index_cmd->add_subcommand("to-local", "Global index -> local indices");
  to_local->add_option("--shape", shape_text)->required();
  to_local->add_option("index", indices)->required()->expected(1);

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites and formula ledger");
  verify_cmd->add_option("--seed", seed, "RNG seed (default 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    double tol = kDefaultTolerance;
    if (tolerance_override) tol = parse_tolerance(*tolerance_override, kToleranceEnv);

    if (*decompose_cmd) {
      if (!tol_text.empty()) tol = parse_tolerance(tol_text, "--tol");
      const DenseMatrix m = read_input(
          path_a, in, [](std::istream& s) { return read_matrix(s); });
      write_coefficients(out, decompose(m, tol));
    } else if (*reconstruct_cmd) {
      write_matrix(out, reconstruct(load_coefficients(path_a, in)));
    } else if (*compose_cmd) {
      const auto a = load_coefficients(path_a, in);
      const auto b = load_coefficients(path_b, in);
      if (method == "gl4") {
        write_coefficients(out, compose_gl4(a, b, tol));
      } else if (method == "antisym-gl4") {
        write_coefficients(out, compose_antisym_gl4(a, b, tol));
        for (const FormulaCheck& c : antisymmetric_table_checks()) {
          if (c.verdict == Verdict::Mismatch) {
            err << "note: table entry " << c.component << " printed as \""
                << c.published << "\" disagrees with the general product; "
                << "evaluated as \"" << c.implemented << "\"\n";
          }
        }
      } else {
        write_coefficients(out, compose(a, b, tol));
      }
    } else if (*transpose_cmd) {
      write_coefficients(out, transpose_coeffs(load_coefficients(path_a, in)));
    } else if (*classify_cmd) {
      const auto c = load_coefficients(path_a, in);
      for (const auto& [idx, v] : c) {
        out << idx.to_string() << ' ' << to_string(classify_basis(idx)) << '\n';
      }
      out << "verdict: " << to_string(classify(c)) << '\n';
    } else if (*project_cmd) {
      if (!want_symmetric && !want_antisymmetric) {
        throw UsageError("project needs --symmetric or --antisymmetric");
      }
      write_coefficients(
          out, project(load_coefficients(path_a, in),
                       want_symmetric ? SymmetryKind::Symmetric
                                      : SymmetryKind::Antisymmetric));
    } else if (*qvec_cmd) {
      if (*qvec_to) {
        const QVector q = read_input(
            path_a, in, [](std::istream& s) { return read_qvector(s); });
        write_coefficients(out, qvector_to_coeffs(q));
      } else {
        write_qvector(out, coeffs_to_qvector(load_coefficients(path_a, in)));
      }
    } else if (*index_cmd) {
      const FactorShape shape(parse_shape(shape_text));
      if (*to_global) {
        out << lex_global_from_local(indices, shape) << '\n';
      } else {
        const auto locals = lex_local_from_global(indices.front(), shape);
        for (std::size_t k = 0; k < locals.size(); ++k) {
          out << (k ? " " : "") << locals[k];
        }
        out << '\n';
      }
    } else if (*verify_cmd) {
      const VerifyReport report = run_verify_suite(seed);
      print_report(out, report);
      return report.all_passed() ? kExitOk : kExitVerifyMismatch;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace pauligl::cli
