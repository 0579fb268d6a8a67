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

#pragma once

// Complex-vector parameterization of 4x4 antisymmetric matrices.
//
// q = a + i b with real a, b in R^3 stands for
//
//       [  a^x    i b ]        (a^x)_jk = eps_jkl a_l
//   Q = [             ]
//       [ -i b^T   0  ]
//
// In Pauli coefficients (factor order sigma_left (x) sigma_right):
//   i a_1 = A21 - A12      b_1 = -A21 - A12
//   i a_2 = -A20 - A23     b_2 = -A20 + A23
//   i a_3 = A02 + A32      b_3 = -A02 + A32

#include <array>
#include <random>
#include <vector>

#include "pauligl/closed_forms.hpp"
#include "pauligl/coefficient_tensor.hpp"
#include "pauligl/dense_matrix.hpp"

namespace pauligl {

struct QVector {
  std::array<double, 3> a{};
  std::array<double, 3> b{};

  friend bool operator==(const QVector&, const QVector&) = default;
};

/** Largest imaginary part a coefficient-derived a or b may carry. */
inline constexpr double kQVectorRealnessTolerance = 1e-9;

/**
 * Reads (a, b) off an order-2 tensor supported on {20, 21, 23, 02, 12, 32}.
 * Throws DomainError on other support or when a component has
 * |imaginary part| > realness_tol (the tensor is antisymmetric but not of
 * the real-vector form above); DimensionError unless the order is 2.
 */
QVector coeffs_to_qvector(const CoefficientTensor& c,
                          double realness_tol = kQVectorRealnessTolerance);

/** Inverse of coeffs_to_qvector; zero components are not stored. */
CoefficientTensor qvector_to_coeffs(const QVector& q);

/** The dense 4x4 matrix Q above; Q + Q^T == 0 exactly. */
DenseMatrix qvector_to_dense(const QVector& q);

QVector random_qvector(std::mt19937_64& rng);

/**
 * The coefficient relations as printed (with -i a_k on the left of the
 * a-relations), each checked against qvector_to_dense() + decompose() on the
 * unit vectors. Verdicts are per relation, a_1..a_3 then b_1..b_3.
 */
std::vector<FormulaCheck> check_printed_relations();

}  // namespace pauligl
