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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Brute-force expectations come from tests/oracle.hpp.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "pauligl/pauligl.hpp"
#include "pauligl_cli/verify_suite.hpp"

namespace pauligl {
namespace {

using Map = CoefficientTensor::Map;

std::string num(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

struct Outcome {
  bool pass;
  std::string detail;
};

oracle::Grid oracle_dense(const CoefficientTensor& c) {
  const std::size_t n = c.side();
  oracle::Grid g(n, std::vector<Complex>(n));
  for (const auto& [idx, v] : c) {
    std::vector<int> digits;
    for (std::size_t k = 0; k < c.order(); ++k) digits.push_back(idx[k].value());
    const auto b = oracle::basis(digits);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) g[r][s] += v * b[r][s];
    }
  }
  return g;
}

Outcome round_trip() {
  Rng rng(1);
  const auto start = std::chrono::steady_clock::now();
  double worst_ratio = 0.0;
  for (std::size_t m = 1; m <= 5; ++m) {
    const std::size_t n = std::size_t{1} << m;
    for (int t = 0; t < 100; ++t) {
      const DenseMatrix a = random_matrix(n, rng);
      const double err = max_abs_difference(reconstruct(decompose(a, 0.0)), a);
      worst_ratio = std::max(worst_ratio, err / (1e-12 * static_cast<double>(n)));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << "worst error / (1e-12 N) = " << worst_ratio << ", " << seconds << " s";
  return {worst_ratio < 1.0 && seconds < 10.0, d.str()};
}

Outcome homomorphism() {
  Rng rng(2);
  double worst = 0.0;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::uniform_int_distribution<std::size_t> nnz(1, std::size_t{1} << (2 * m));
    for (int t = 0; t < 50; ++t) {
      const auto a = random_tensor(m, nnz(rng), rng);
      const auto b = random_tensor(m, nnz(rng), rng);
      const auto want = decompose(reconstruct(a) * reconstruct(b), 0.0);
      worst = std::max(worst, max_abs_difference(compose(a, b, 0.0), want));
    }
  }
  return {worst <= 1e-10, "max deviation " + num(worst)};
}

Outcome structure_constants() {
  std::size_t ok = 0;
  std::size_t total = 0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const ScaledMultiIndex p = single_product(PauliIndex(mu), PauliIndex(nu));
      const auto product = oracle::multiply(oracle::pauli(mu), oracle::pauli(nu));
      const auto want = oracle::pauli(p.index[0].value());
      bool same = true;
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t s = 0; s < 2; ++s) {
          if (product[r][s] != to_complex(p.phase) * want[r][s]) same = false;
        }
      }
      ok += same;
      ++total;
    }
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    const std::uint64_t count = std::uint64_t{1} << (2 * m);
    const double side = static_cast<double>(std::size_t{1} << m);
    for (std::uint64_t x = 0; x < count; ++x) {
      for (std::uint64_t y = 0; y < count; ++y) {
        const Complex tr = trace_of_product(basis_element(MultiIndex::from_rank(x, m)),
                                            basis_element(MultiIndex::from_rank(y, m)));
        ok += tr == Complex(x == y ? side : 0.0);
        ++total;
      }
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " exact"};
}

Outcome gl4_closed_form() {
  Rng rng(4);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto a = random_dense_tensor(2, rng);
    const auto b = random_dense_tensor(2, rng);
    worst = std::max(worst, max_abs_difference(compose_gl4(a, b, 0.0), compose(a, b, 0.0)));
  }
  const ClosedFormReport report = verify_closed_forms(42);
  std::size_t confirmed = 0;
  for (const FormulaCheck& c : report.gl4_families) confirmed += c.verdict == Verdict::Confirmed;
  std::ostringstream d;
  d << "max deviation " << worst << ", families confirmed " << confirmed << "/4";
  return {worst <= 1e-12 && confirmed == 4 && report.gl4_families.size() == 4, d.str()};
}

Outcome antisymmetric_table() {
  const auto& six = antisymmetric_gl4_support();
  std::size_t pairs_ok = 0;
  std::size_t pairs = 0;
  for (const MultiIndex& x : six) {
    for (const MultiIndex& y : six) {
      const CoefficientTensor a(2, Map{{x, 1.0}});
      const CoefficientTensor b(2, Map{{y, 1.0}});
      const auto product = oracle::multiply(oracle_dense(a), oracle_dense(b));
      const CoefficientTensor got = compose_antisym_gl4(a, b, 0.0);
      bool same = true;
      for (std::uint64_t r = 0; r < 16; ++r) {
        const Complex want = oracle::coefficient(product, oracle::digits_of(r, 2));
        if (got.coefficient(MultiIndex::from_rank(r, 2)) != want) same = false;
      }
      pairs_ok += same;
      ++pairs;
    }
  }
  const auto& checks = antisymmetric_table_checks();
  std::size_t labelled = 0;
  std::size_t mismatches = 0;
  std::string corrected;
  for (const FormulaCheck& c : checks) {
    const bool confirmed_ok = c.verdict == Verdict::Confirmed && c.agreeing == c.trials &&
                              c.implemented == c.published;
    const bool mismatch_ok = c.verdict == Verdict::Mismatch && c.agreeing < c.trials &&
                             c.implemented != c.published;
    labelled += (confirmed_ok || mismatch_ok) && c.trials == 36;
    if (c.verdict == Verdict::Mismatch) {
      ++mismatches;
      corrected += " " + c.component + " -> " + c.implemented;
    }
  }
  std::ostringstream d;
  d << pairs_ok << "/" << pairs << " unit pairs exact, " << labelled
    << "/16 labelled, " << mismatches << " corrected:" << corrected;
  return {pairs_ok == 36 && labelled == 16 && checks.size() == 16, d.str()};
}

Outcome transpose() {
  Rng rng(6);
  double worst = 0.0;
  bool involution = true;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int t = 0; t < 100; ++t) {
      const auto c = random_tensor(m, std::size_t{1} << (2 * m), rng);
      const auto want = decompose(reconstruct(c).transpose(), 0.0);
      worst = std::max(worst, max_abs_difference(transpose_coeffs(c), want));
      involution = involution && transpose_coeffs(transpose_coeffs(c)) == c;
    }
  }
  return {worst <= 1e-12 && involution,
          "max deviation " + num(worst) + (involution ? ", involution exact" : "")};
}

Outcome symmetry_split() {
  Rng rng(7);
  bool exact = true;
  double worst = 0.0;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int t = 0; t < 20; ++t) {
      const auto c = random_dense_tensor(m, rng);
      const auto s = project(c, SymmetryKind::Symmetric);
      const auto a = project(c, SymmetryKind::Antisymmetric);
      exact = exact && s + a == c;
      const DenseMatrix d = reconstruct(c);
      const DenseMatrix dt = d.transpose();
      worst = std::max(worst, max_abs_difference(reconstruct(s), Complex(0.5) * (d + dt)));
      worst = std::max(worst, max_abs_difference(reconstruct(a), Complex(0.5) * (d - dt)));
    }
  }
  const std::set<std::string> expected = {"02", "12", "32", "20", "21", "23"};
  std::set<std::string> anti;
  for (std::uint64_t r = 0; r < 16; ++r) {
    const MultiIndex idx = MultiIndex::from_rank(r, 2);
    if (classify_basis(idx) == SymmetryKind::Antisymmetric) anti.insert(idx.to_string());
  }
  return {exact && worst <= 1e-12 && anti == expected,
          std::string(exact ? "split exact" : "split inexact") + ", " +
              std::to_string(anti.size()) + " antisymmetric at m=2, max deviation " +
              num(worst)};
}

Outcome fedorov() {
  Rng rng(8);
  double round = 0.0;
  double cross = 0.0;
  bool antisymmetric = true;
  for (int t = 0; t < 100; ++t) {
    const QVector q = random_qvector(rng);
    const QVector back = coeffs_to_qvector(qvector_to_coeffs(q));
    for (std::size_t k = 0; k < 3; ++k) {
      round = std::max({round, std::abs(back.a[k] - q.a[k]), std::abs(back.b[k] - q.b[k])});
    }
    const DenseMatrix d = qvector_to_dense(q);
    antisymmetric = antisymmetric && d + d.transpose() == DenseMatrix(4);
    cross = std::max(cross, max_abs_difference(qvector_to_coeffs(q), decompose(d, 0.0)));
  }
  std::ostringstream d;
  d << "round trip " << round << ", cross path " << cross
    << (antisymmetric ? ", dense exactly antisymmetric" : ", dense not antisymmetric");
  return {round <= 1e-12 && cross <= 1e-12 && antisymmetric, d.str()};
}

void all_shapes(std::vector<std::size_t>& prefix, std::size_t product,
                const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (!prefix.empty()) visit(prefix);
  for (std::size_t s = 2; product * s <= 64; ++s) {
    prefix.push_back(s);
    all_shapes(prefix, product * s, visit);
    prefix.pop_back();
  }
}

Outcome index_maps() {
  std::size_t shapes = 0;
  std::size_t shapes_ok = 0;
  std::vector<std::size_t> prefix;
  all_shapes(prefix, 1, [&](const std::vector<std::size_t>& sizes) {
    const FactorShape shape(sizes);
    bool ok = true;
    std::vector<std::size_t> locals(sizes.size(), 0);
    for (std::size_t expected = 0; expected < shape.total(); ++expected) {
      // Odometer with the rightmost factor fastest.
      ok = ok && lex_global_from_local(locals, shape) == expected &&
           lex_local_from_global(expected, shape) == locals;
      for (std::size_t k = sizes.size(); k-- > 0;) {
        if (++locals[k] < sizes[k]) break;
        locals[k] = 0;
      }
    }
    shapes_ok += ok;
    ++shapes;
  });

  std::size_t cuts = 0;
  std::size_t cuts_ok = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t rc = 1; rc < n; ++rc) {
      for (std::size_t cc = 1; cc < n; ++cc) {
        const BlockCuts bc(rc, cc, n);
        std::set<std::tuple<int, int, std::size_t, std::size_t>> seen;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const BlockLocal l = block_local_from_global(i, j, bc);
            const bool high_row = i >= rc;
            const bool high_col = j >= cc;
            ok = ok && (l.block_row == BlockSide::High) == high_row &&
                 (l.block_col == BlockSide::High) == high_col &&
                 l.row == (high_row ? i - rc : i) && l.col == (high_col ? j - cc : j) &&
                 block_global_from_local(l, bc) == std::pair{i, j};
            seen.emplace(static_cast<int>(l.block_row), static_cast<int>(l.block_col),
                         l.row, l.col);
          }
        }
        cuts_ok += ok && seen.size() == n * n;
        ++cuts;
      }
    }
  }

  Rng rng(9);
  std::size_t kron_ok = 0;
  std::size_t kron_total = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<DenseMatrix> factors;
    DenseMatrix full = DenseMatrix::identity(1);
    for (std::size_t k = 0; k < m; ++k) {
      factors.push_back(random_matrix(2, rng));
      full = kron(full, factors.back());
    }
    const FactorShape shape = FactorShape::qubits(m);
    for (std::size_t i = 0; i < full.size(); ++i) {
      for (std::size_t j = 0; j < full.size(); ++j) {
        const auto li = lex_local_from_global(i, shape);
        const auto lj = lex_local_from_global(j, shape);
        Complex want = 1.0;
        for (std::size_t k = 0; k < m; ++k) want *= factors[k](li[k], lj[k]);
        kron_ok += std::abs(full(i, j) - want) <= 1e-15;
        ++kron_total;
      }
    }
  }
  std::ostringstream d;
  d << shapes_ok << "/" << shapes << " shapes, " << cuts_ok << "/" << cuts << " block cuts, "
    << kron_ok << "/" << kron_total << " kron entries";
  return {shapes_ok == shapes && cuts_ok == cuts && kron_ok == kron_total, d.str()};
}

bool within(const CoefficientTensor& c, const std::vector<MultiIndex>& allowed) {
  return std::all_of(c.begin(), c.end(), [&](const auto& e) {
    return std::find(allowed.begin(), allowed.end(), e.first) != allowed.end();
  });
}

Outcome closed_classes() {
  Rng rng(10);
  const std::vector<MultiIndex> left = {MultiIndex("00"), MultiIndex("10"),
                                        MultiIndex("20"), MultiIndex("30")};
  const std::vector<MultiIndex> right = {MultiIndex("00"), MultiIndex("01"),
                                         MultiIndex("02"), MultiIndex("03")};
  std::size_t ok = 0;
  for (int t = 0; t < 100; ++t) {
    ok += within(compose(random_on_support(left, rng), random_on_support(left, rng)), left);
    ok += within(compose(random_on_support(right, rng), random_on_support(right, rng)), right);
  }
  const auto& six = antisymmetric_gl4_support();
  std::string witness;
  for (const MultiIndex& x : six) {
    for (const MultiIndex& y : six) {
      if (!witness.empty()) break;
      const auto c = compose(CoefficientTensor(2, Map{{x, 1.0}}),
                             CoefficientTensor(2, Map{{y, 1.0}}));
      if (!within(c, six)) {
        witness = x.to_string() + "*" + y.to_string() + " -> " + c.begin()->first.to_string();
      }
    }
  }
  return {ok == 200 && !witness.empty(),
          std::to_string(ok) + "/200 closed, counterexample " +
              (witness.empty() ? "none" : witness)};
}

Outcome determinism() {
  std::ostringstream first;
  std::ostringstream second;
  const cli::VerifyReport a = cli::run_verify_suite(42);
  cli::print_report(first, a);
  cli::print_report(second, cli::run_verify_suite(42));
  const bool same = first.str() == second.str();
  return {same && a.all_passed(),
          std::to_string(first.str().size()) + " bytes, " +
              (same ? "identical" : "different") +
              (a.all_passed() ? ", all suites pass" : ", suite failures")};
}

}  // namespace
}  // namespace pauligl

int main() {
  using namespace pauligl;
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"round-trip", round_trip},
      {"homomorphism", homomorphism},
      {"structure-constants", structure_constants},
      {"gl4-closed-form", gl4_closed_form},
      {"antisymmetric-table", antisymmetric_table},
      {"transpose", transpose},
      {"symmetry-split", symmetry_split},
      {"qvector", fedorov},
      {"index-maps", index_maps},
      {"closed-classes", closed_classes},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o{false, ""};
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu %-20s %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
