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

#include "pauligl_cli/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>

#include "pauligl/pauligl.hpp"

namespace pauligl::cli {

namespace {

// Independent stream per suite so adding a suite never perturbs the others.
Rng suite_rng(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h),
                    static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

class SuiteRunner {
 public:
  explicit SuiteRunner(std::uint64_t seed) : seed_(seed) {}

  /** `trial` returns whether one case passed; it is called `count` times. */
  void run(const std::string& name, std::size_t count,
           const std::function<bool(Rng&, std::size_t)>& trial) {
    Rng rng = suite_rng(seed_, name);
    SuiteResult result{name, 0, count};
    for (std::size_t t = 0; t < count; ++t) {
      if (trial(rng, t)) ++result.passed;
    }
    results_.push_back(std::move(result));
  }

  std::vector<SuiteResult> take() { return std::move(results_); }

 private:
  std::uint64_t seed_;
  std::vector<SuiteResult> results_;
};

std::uint64_t basis_count(std::size_t m) { return std::uint64_t{1} << (2 * m); }

bool supported_within(const CoefficientTensor& c,
                      const std::vector<MultiIndex>& allowed) {
  return std::all_of(c.begin(), c.end(), [&](const auto& entry) {
    return std::find(allowed.begin(), allowed.end(), entry.first) !=
           allowed.end();
  });
}

// Every ordered shape with factors >= 2 and product <= limit.
void enumerate_shapes(std::vector<std::size_t>& prefix, std::size_t product,
                      std::size_t limit,
                      std::vector<std::vector<std::size_t>>& out) {
  if (!prefix.empty()) out.push_back(prefix);
  for (std::size_t s = 2; product * s <= limit; ++s) {
    prefix.push_back(s);
    enumerate_shapes(prefix, product * s, limit, out);
    prefix.pop_back();
  }
}

bool lex_bijection(const FactorShape& shape) {
  std::vector<bool> seen(shape.total(), false);
  std::vector<std::size_t> locals(shape.factors(), 0);
  for (std::size_t count = 0; count < shape.total(); ++count) {
    const std::size_t g = lex_global_from_local(locals, shape);
    if (g >= shape.total() || seen[g]) return false;
    seen[g] = true;
    if (lex_local_from_global(g, shape) != locals) return false;
    // Odometer increment, rightmost factor fastest.
    for (std::size_t k = shape.factors(); k-- > 0;) {
      if (++locals[k] < shape.sizes()[k]) break;
      locals[k] = 0;
    }
  }
  return true;
}

bool block_bijection(const BlockCuts& cuts) {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      const BlockLocal local = block_local_from_global(i, j, cuts);
      if (block_global_from_local(local, cuts) != std::pair{i, j}) return false;
    }
  }
  return true;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.ok(); });
}

const SuiteResult* VerifyReport::find(const std::string& name) const {
  for (const SuiteResult& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

VerifyReport run_verify_suite(std::uint64_t seed) {
  SuiteRunner runner(seed);

  // Structure constants and exact traces.
  runner.run("structure-constants", 16, [](Rng&, std::size_t t) {
    const PauliIndex mu(static_cast<int>(t / 4));
    const PauliIndex nu(static_cast<int>(t % 4));
    return to_dense(single_product(mu, nu)) ==
           pauli_matrix(mu) * pauli_matrix(nu);
  });
  runner.run("phase-associativity", 64, [](Rng&, std::size_t t) {
    const auto p = [](std::size_t v) { return static_cast<Phase>(v & 3U); };
    const Phase a = p(t), b = p(t >> 2), c = p(t >> 4);
    return (a * b) * c == a * (b * c) &&
           to_complex(a * b) == to_complex(a) * to_complex(b);
  });
  for (std::size_t m = 1; m <= 3; ++m) {
    const std::uint64_t count = basis_count(m);
    std::vector<DenseMatrix> basis;
    for (std::uint64_t r = 0; r < count; ++r) {
      basis.push_back(basis_element(MultiIndex::from_rank(r, m)));
    }
    const double side = static_cast<double>(std::size_t{1} << m);
    runner.run("basis-trace m=" + std::to_string(m), count,
               [&](Rng&, std::size_t r) {
                 return basis[r].trace() == Complex(r == 0 ? side : 0.0);
               });
    runner.run("orthogonality m=" + std::to_string(m), count * count,
               [&](Rng&, std::size_t t) {
                 const std::size_t a = t / count, b = t % count;
                 return trace_of_product(basis[a], basis[b]) ==
                        Complex(a == b ? side : 0.0);
               });
    runner.run("multi-product m=" + std::to_string(m), count * count,
               [&](Rng&, std::size_t t) {
                 const auto a = MultiIndex::from_rank(t / count, m);
                 const auto b = MultiIndex::from_rank(t % count, m);
                 return to_dense(multi_product(a, b)) ==
                        basis[a.rank()] * basis[b.rank()];
               });
  }

  // Decomposition.
  for (std::size_t m = 1; m <= 5; ++m) {
    const std::size_t n = std::size_t{1} << m;
    runner.run("round-trip m=" + std::to_string(m), 100,
               [n](Rng& rng, std::size_t) {
                 const DenseMatrix a = random_matrix(n, rng);
                 return max_abs_difference(reconstruct(decompose(a, 0.0)), a) <
                        1e-12 * static_cast<double>(n);
               });
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    const std::size_t n = std::size_t{1} << m;
    runner.run("fast-vs-trace m=" + std::to_string(m), 10,
               [n](Rng& rng, std::size_t) {
                 const DenseMatrix a = random_matrix(n, rng);
                 return max_abs_difference(decompose(a, 0.0),
                                           decompose_by_trace(a, 0.0)) <= 1e-13;
               });
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    runner.run("completeness m=" + std::to_string(m), 50,
               [m](Rng& rng, std::size_t) {
                 std::uniform_int_distribution<std::size_t> nnz(1, 6);
                 const CoefficientTensor c = random_tensor(m, nnz(rng), rng);
                 return max_abs_difference(decompose(reconstruct(c), 0.0), c) <
                        1e-12;
               });
  }

  // Composition.
  for (std::size_t m = 1; m <= 3; ++m) {
    runner.run("homomorphism m=" + std::to_string(m), 50,
               [m](Rng& rng, std::size_t) {
                 std::uniform_int_distribution<std::size_t> nnz(
                     1, static_cast<std::size_t>(basis_count(m)));
                 const CoefficientTensor a = random_tensor(m, nnz(rng), rng);
                 const CoefficientTensor b = random_tensor(m, nnz(rng), rng);
                 const CoefficientTensor oracle =
                     decompose(reconstruct(a) * reconstruct(b), 0.0);
                 return max_abs_difference(compose(a, b, 0.0), oracle) <= 1e-10;
               });
  }
  for (std::size_t m = 1; m <= 2; ++m) {
    runner.run("associativity m=" + std::to_string(m), 20,
               [m](Rng& rng, std::size_t) {
                 const auto a = random_dense_tensor(m, rng);
                 const auto b = random_dense_tensor(m, rng);
                 const auto c = random_dense_tensor(m, rng);
                 return max_abs_difference(compose(compose(a, b), c),
                                           compose(a, compose(b, c))) <= 1e-10;
               });
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    runner.run("identity m=" + std::to_string(m), 20,
               [m](Rng& rng, std::size_t) {
                 const auto e = CoefficientTensor::identity(m);
                 const auto a = random_tensor(m, 5, rng);
                 return compose(e, a) == a && compose(a, e) == a;
               });
  }
  runner.run("gl4-specialization", 100, [](Rng& rng, std::size_t) {
    const auto a = random_dense_tensor(2, rng);
    const auto b = random_dense_tensor(2, rng);
    return max_abs_difference(compose_gl4(a, b, 0.0), compose(a, b, 0.0)) <=
           1e-12;
  });
  {
    const auto& six = antisymmetric_gl4_support();
    runner.run("antisym-gl4-unit-pairs", 36, [&](Rng&, std::size_t t) {
      const CoefficientTensor a(2, {{six[t / 6], 1.0}});
      const CoefficientTensor b(2, {{six[t % 6], 1.0}});
      return compose_antisym_gl4(a, b, 0.0) == compose(a, b, 0.0);
    });
    runner.run("antisym-gl4-random", 100, [&](Rng& rng, std::size_t) {
      const auto a = random_on_support(six, rng);
      const auto b = random_on_support(six, rng);
      return max_abs_difference(compose_antisym_gl4(a, b, 0.0),
                                compose(a, b, 0.0)) <= 1e-12;
    });
  }

  // Closed classes.
  const std::vector<MultiIndex> left_class = {
      MultiIndex("00"), MultiIndex("10"), MultiIndex("20"), MultiIndex("30")};
  const std::vector<MultiIndex> right_class = {
      MultiIndex("00"), MultiIndex("01"), MultiIndex("02"), MultiIndex("03")};
  runner.run("closed-class sigma(x)I", 100, [&](Rng& rng, std::size_t) {
    const auto a = random_on_support(left_class, rng);
    const auto b = random_on_support(left_class, rng);
    return supported_within(compose(a, b), left_class);
  });
  runner.run("closed-class I(x)sigma", 100, [&](Rng& rng, std::size_t) {
    const auto a = random_on_support(right_class, rng);
    const auto b = random_on_support(right_class, rng);
    return supported_within(compose(a, b), right_class);
  });
  runner.run("antisymmetric-not-closed", 1, [](Rng&, std::size_t) {
    const auto& six = antisymmetric_gl4_support();
    for (const MultiIndex& x : six) {
      for (const MultiIndex& y : six) {
        const CoefficientTensor c = compose(CoefficientTensor(2, {{x, 1.0}}),
                                            CoefficientTensor(2, {{y, 1.0}}));
        if (!supported_within(c, six)) return true;
      }
    }
    return false;
  });

  // Transpose and symmetry.
  for (std::size_t m = 1; m <= 4; ++m) {
    runner.run("transpose m=" + std::to_string(m), 100,
               [m](Rng& rng, std::size_t) {
                 const auto c = random_dense_tensor(m, rng);
                 const auto t = transpose_coeffs(c);
                 return max_abs_difference(reconstruct(t),
                                           reconstruct(c).transpose()) <=
                            1e-12 &&
                        transpose_coeffs(t) == c;
               });
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    runner.run("classify-vs-dense m=" + std::to_string(m), basis_count(m),
               [m](Rng&, std::size_t r) {
                 const auto idx = MultiIndex::from_rank(r, m);
                 const DenseMatrix b = basis_element(idx);
                 const bool anti = b.transpose() == -1.0 * b;
                 const bool sym = b.transpose() == b;
                 return classify_basis(idx) == SymmetryKind::Antisymmetric
                            ? anti && !sym
                            : sym && !anti;
               });
  }
  runner.run("antisymmetric-six", 1, [](Rng&, std::size_t) {
    std::vector<MultiIndex> found;
    for (std::uint64_t r = 0; r < 16; ++r) {
      const auto idx = MultiIndex::from_rank(r, 2);
      if (classify_basis(idx) == SymmetryKind::Antisymmetric) found.push_back(idx);
    }
    return found == antisymmetric_gl4_support();
  });
  runner.run("symmetry-split", 100, [](Rng& rng, std::size_t) {
    const auto c = random_dense_tensor(2, rng);
    const auto s = project(c, SymmetryKind::Symmetric);
    const auto a = project(c, SymmetryKind::Antisymmetric);
    const DenseMatrix dense = reconstruct(c);
    const DenseMatrix dense_t = dense.transpose();
    return s + a == c &&
           max_abs_difference(s, decompose(0.5 * (dense + dense_t), 0.0)) <=
               1e-12 &&
           max_abs_difference(a, decompose(0.5 * (dense - dense_t), 0.0)) <=
               1e-12;
  });

  // Fedorov parameterization.
  runner.run("qvector-round-trip", 100, [](Rng& rng, std::size_t) {
    const QVector q = random_qvector(rng);
    const QVector back = coeffs_to_qvector(qvector_to_coeffs(q));
    for (std::size_t k = 0; k < 3; ++k) {
      if (std::abs(back.a[k] - q.a[k]) > 1e-12) return false;
      if (std::abs(back.b[k] - q.b[k]) > 1e-12) return false;
    }
    return true;
  });
  runner.run("qvector-dense-antisymmetric", 100, [](Rng& rng, std::size_t) {
    const DenseMatrix m = qvector_to_dense(random_qvector(rng));
    return m + m.transpose() == DenseMatrix(4);
  });
  runner.run("qvector-cross-path", 100, [](Rng& rng, std::size_t) {
    const QVector q = random_qvector(rng);
    return max_abs_difference(decompose(qvector_to_dense(q), 0.0),
                              qvector_to_coeffs(q)) <= 1e-12 &&
           max_abs_difference(reconstruct(qvector_to_coeffs(q)),
                              qvector_to_dense(q)) <= 1e-12;
  });

  // Index maps.
  {
    std::vector<std::vector<std::size_t>> shapes;
    std::vector<std::size_t> prefix;
    enumerate_shapes(prefix, 1, 64, shapes);
    runner.run("lex-bijection", shapes.size(), [&](Rng&, std::size_t t) {
      return lex_bijection(FactorShape(shapes[t]));
    });
    std::vector<BlockCuts> cuts;
    for (std::size_t n = 2; n <= 8; ++n) {
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) cuts.emplace_back(i, j, n);
      }
    }
    runner.run("block-bijection", cuts.size(), [&](Rng&, std::size_t t) {
      return block_bijection(cuts[t]);
    });
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    runner.run("kron-entry m=" + std::to_string(m), basis_count(m),
               [m](Rng&, std::size_t r) {
                 const auto idx = MultiIndex::from_rank(r, m);
                 const DenseMatrix b = basis_element(idx);
                 const FactorShape shape = FactorShape::qubits(m);
                 for (std::size_t i = 0; i < b.size(); ++i) {
                   const auto li = lex_local_from_global(i, shape);
                   for (std::size_t j = 0; j < b.size(); ++j) {
                     const auto lj = lex_local_from_global(j, shape);
                     Complex product = 1.0;
                     for (std::size_t k = 0; k < m; ++k) {
                       product *= pauli_matrix(idx[k])(li[k], lj[k]);
                     }
                     if (product != b(i, j)) return false;
                   }
                 }
                 return true;
               });
  }

  VerifyReport report;
  report.seed = seed;
  report.suites = runner.take();
  report.closed_forms = verify_closed_forms(seed);
  report.qvector_relations = check_printed_relations();
  return report;
}

namespace {

// `readings` lists alternative interpretations; their second line names the
// interpretation rather than a correction.
void print_checks(std::ostream& out, const std::vector<FormulaCheck>& checks,
                  bool readings = false) {
  for (const FormulaCheck& c : checks) {
    out << "  " << std::left << std::setw(4) << c.component << ' '
        << std::setw(9) << to_string(c.verdict) << ' ' << c.agreeing << '/'
        << c.trials << "  published: " << c.published << '\n';
    if (readings) {
      out << "       reading:    " << c.implemented << '\n';
    } else if (c.verdict == Verdict::Mismatch) {
      out << "       correction: " << c.implemented << '\n';
    } else if (c.implemented != c.published) {
      out << "       evaluated:  " << c.implemented << '\n';
    }
  }
}

}  // namespace

void print_report(std::ostream& out, const VerifyReport& report) {
  out << "pauligl verify, seed " << report.seed << "\n\n";
  out << "property suites\n";
  std::size_t ok = 0;
  for (const SuiteResult& s : report.suites) {
    out << "  " << std::left << std::setw(30) << s.name << ' ' << std::right
        << std::setw(5) << s.passed << '/' << std::left << std::setw(5)
        << s.total << ' ' << (s.ok() ? "PASS" : "FAIL") << '\n';
    if (s.ok()) ++ok;
  }
  out << std::right;

  out << "\n4x4 closed-form families (compose_gl4 vs compose, random pairs)\n";
  print_checks(out, report.closed_forms.gl4_families);
  out << "\n4x4 printed index-letter readings (random pairs)\n";
  print_checks(out, report.closed_forms.gl4_printed_readings, true);
  out << "\nantisymmetric 4x4 table (36 unit pairs per entry)\n";
  print_checks(out, report.closed_forms.antisymmetric_table);
  out << "\nq-vector coefficient relations (6 unit vectors)\n";
  print_checks(out, report.qvector_relations);

  out << "\nsummary: " << ok << '/' << report.suites.size()
      << " property suites passed\n";
}

}  // namespace pauligl::cli
