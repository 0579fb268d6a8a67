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

#include <cstddef>

#include "pauligl/coefficient_tensor.hpp"
#include "pauligl/dense_matrix.hpp"

namespace pauligl {

/** m with 2^m == side; throws DimensionError if side is not a power of two >= 2. */
std::size_t order_for_side(std::size_t side);

/**
 * Coefficients of `a` in the Pauli Kronecker basis:
 *   c(idx) = 2^-m Tr(basis_element(idx) * a).
 *
 * Evaluated with m passes of a 4-point transform over the 4^m entries
 * (O(m 4^m)) rather than one trace per multi-index. Entries with
 * |c| <= tol are dropped. Throws DimensionError unless side(a) = 2^m.
 */
CoefficientTensor decompose(const DenseMatrix& a,
                            double tol = kDefaultTolerance);

/** Same coefficients, one explicit trace per multi-index (O(16^m)). */
CoefficientTensor decompose_by_trace(const DenseMatrix& a,
                                     double tol = kDefaultTolerance);

/** 2^-m Tr(basis_element(idx) * a) for a single multi-index. */
Complex trace_coefficient(const DenseMatrix& a, const MultiIndex& idx);

/** sum_idx c(idx) basis_element(idx) as a dense 2^m x 2^m matrix. */
DenseMatrix reconstruct(const CoefficientTensor& c);

/** Tr(reconstruct(c)) = 2^m c(0,...,0); every other basis element is traceless. */
Complex trace_from_coeffs(const CoefficientTensor& c);

}  // namespace pauligl
