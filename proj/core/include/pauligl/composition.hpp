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

#include "pauligl/coefficient_tensor.hpp"

namespace pauligl {

/**
 * Product of two matrices computed in coefficient space.
 *
 * Every pair of stored coefficients (a(mu), b(nu)) contributes
 * a(mu) b(nu) phase to C(lambda), where multi_product(mu, nu) =
 * (phase, lambda). Cost is O(nnz(a) nnz(b) m). Pairs are accumulated in
 * lexicographic (mu, nu) order, so results are bit-reproducible.
 * Throws DimensionError when orders differ.
 */
CoefficientTensor compose(const CoefficientTensor& a,
                          const CoefficientTensor& b,
                          double tol = kDefaultTolerance);

/**
 * 4x4 product evaluated through the closed-form component families
 * C00, Ck0, C0l and Cij (Levi-Civita contractions over indices 1..3).
 * Throws DimensionError unless both operands have order 2.
 */
CoefficientTensor compose_gl4(const CoefficientTensor& a,
                              const CoefficientTensor& b,
                              double tol = kDefaultTolerance);

/**
 * Product of two antisymmetric 4x4 matrices through the 16-entry bilinear
 * table over the supports {20, 21, 23, 02, 12, 32}. Table entries are
 * checked against compose() once; entries that fail use the corrected term
 * list (see antisymmetric_table_checks()). Throws DomainError if either
 * operand has support outside the six indices, DimensionError unless both
 * have order 2.
 */
CoefficientTensor compose_antisym_gl4(const CoefficientTensor& a,
                                      const CoefficientTensor& b,
                                      double tol = kDefaultTolerance);

}  // namespace pauligl
