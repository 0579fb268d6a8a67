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

#include "pauligl/fedorov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "gl4_families.hpp"
#include "pauligl/decomposition.hpp"
#include "pauligl/errors.hpp"

namespace pauligl {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Gl4Antisym {
  Complex a02, a12, a20, a21, a23, a32;
};

Gl4Antisym read_support(const CoefficientTensor& c) {
  if (c.order() != 2) {
    throw DimensionError("q-vector conversion needs an order-2 tensor, got " +
                         std::to_string(c.order()));
  }
  const auto& six = antisymmetric_gl4_support();
  for (const auto& [idx, v] : c) {
    if (std::find(six.begin(), six.end(), idx) == six.end()) {
      throw DomainError("coefficient " + idx.to_string() +
                        " is outside the antisymmetric 4x4 support");
    }
  }
  return {c.coefficient(MultiIndex("02")), c.coefficient(MultiIndex("12")),
          c.coefficient(MultiIndex("20")), c.coefficient(MultiIndex("21")),
          c.coefficient(MultiIndex("23")), c.coefficient(MultiIndex("32"))};
}

double require_real(Complex z, const char* name, double tol) {
  if (!(std::abs(z.imag()) <= tol)) {
    throw DomainError(std::string("q-vector component ") + name +
                      " is not real (imaginary part " +
                      std::to_string(z.imag()) + ")");
  }
  return z.real();
}

}  // namespace

QVector coeffs_to_qvector(const CoefficientTensor& c, double realness_tol) {
  const Gl4Antisym A = read_support(c);
  const std::array<Complex, 6> raw = {
      -kI * (A.a21 - A.a12), kI * (A.a20 + A.a23), -kI * (A.a02 + A.a32),
      -A.a21 - A.a12,        -A.a20 + A.a23,       -A.a02 + A.a32,
  };
  static constexpr const char* kNames[] = {"a1", "a2", "a3", "b1", "b2", "b3"};
  QVector q;
  for (std::size_t k = 0; k < 3; ++k) {
    q.a[k] = require_real(raw[k], kNames[k], realness_tol);
    q.b[k] = require_real(raw[k + 3], kNames[k + 3], realness_tol);
  }
  return q;
}

CoefficientTensor qvector_to_coeffs(const QVector& q) {
  const auto& [a1, a2, a3] = q.a;
  const auto& [b1, b2, b3] = q.b;
  CoefficientTensor::Map coeffs = {
      {MultiIndex("21"), 0.5 * (kI * a1 - b1)},
      {MultiIndex("12"), 0.5 * (-kI * a1 - b1)},
      {MultiIndex("20"), 0.5 * (-kI * a2 - b2)},
      {MultiIndex("23"), 0.5 * (-kI * a2 + b2)},
      {MultiIndex("02"), 0.5 * (kI * a3 - b3)},
      {MultiIndex("32"), 0.5 * (kI * a3 + b3)},
  };
  return CoefficientTensor(2, std::move(coeffs), 0.0);
}

DenseMatrix qvector_to_dense(const QVector& q) {
  DenseMatrix m(4);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      double sum = 0.0;
      for (int l = 0; l < 3; ++l) {
        sum += detail::levi_civita(j + 1, k + 1, l + 1) * q.a[l];
      }
      m(j, k) = sum;
    }
    m(j, 3) = kI * q.b[j];
    m(3, j) = -kI * q.b[j];
  }
  return m;
}

QVector random_qvector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  QVector q;
  for (auto& x : q.a) x = dist(rng);
  for (auto& x : q.b) x = dist(rng);
  return q;
}

std::vector<FormulaCheck> check_printed_relations() {
  struct Relation {
    const char* name;
    const char* printed;
    const char* corrected;
    // Component value implied by the printed relation.
    std::function<Complex(const Gl4Antisym&)> printed_value;
    std::function<double(const QVector&)> truth;
  };
  const Relation relations[] = {
      {"a1", "-i a1 = A21 - A12", "i a1 = A21 - A12",
       [](const Gl4Antisym& A) { return kI * (A.a21 - A.a12); },
       [](const QVector& q) { return q.a[0]; }},
      {"a2", "-i a2 = -A20 - A23", "i a2 = -A20 - A23",
       [](const Gl4Antisym& A) { return kI * (-A.a20 - A.a23); },
       [](const QVector& q) { return q.a[1]; }},
      {"a3", "-i a3 = A02 + A32", "i a3 = A02 + A32",
       [](const Gl4Antisym& A) { return kI * (A.a02 + A.a32); },
       [](const QVector& q) { return q.a[2]; }},
      {"b1", "b1 = -A21 - A12", "b1 = -A21 - A12",
       [](const Gl4Antisym& A) { return -A.a21 - A.a12; },
       [](const QVector& q) { return q.b[0]; }},
      {"b2", "b2 = -A20 + A23", "b2 = -A20 + A23",
       [](const Gl4Antisym& A) { return -A.a20 + A.a23; },
       [](const QVector& q) { return q.b[1]; }},
      {"b3", "b3 = -A02 + A32", "b3 = -A02 + A32",
       [](const Gl4Antisym& A) { return -A.a02 + A.a32; },
       [](const QVector& q) { return q.b[2]; }},
  };

  std::vector<QVector> units;
  for (std::size_t k = 0; k < 6; ++k) {
    QVector q;
    (k < 3 ? q.a[k] : q.b[k - 3]) = 1.0;
    units.push_back(q);
  }

  std::vector<FormulaCheck> out;
  for (const Relation& r : relations) {
    FormulaCheck check;
    check.component = r.name;
    check.published = r.printed;
    for (const QVector& q : units) {
      const Gl4Antisym A = read_support(decompose(qvector_to_dense(q)));
      ++check.trials;
      if (std::abs(r.printed_value(A) - r.truth(q)) <= 1e-12) ++check.agreeing;
    }
    check.verdict = check.agreeing == check.trials ? Verdict::Confirmed
                                                   : Verdict::Mismatch;
    check.implemented =
        check.verdict == Verdict::Confirmed ? r.printed : r.corrected;
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace pauligl
