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

// Seeded generators for property checks and benchmarks. All draws go
// through std::mt19937_64, so a given seed reproduces the same values.

#include <cstddef>
#include <random>
#include <span>

#include "pauligl/coefficient_tensor.hpp"
#include "pauligl/dense_matrix.hpp"

namespace pauligl {

using Rng = std::mt19937_64;

/** Real and imaginary parts uniform in [-1, 1). */
Complex random_complex(Rng& rng);

DenseMatrix random_matrix(std::size_t n, Rng& rng);

/**
 * Order-m tensor with `nnz` distinct random multi-indices (capped at 4^m)
 * and random_complex() values.
 */
CoefficientTensor random_tensor(std::size_t order, std::size_t nnz, Rng& rng);

/** Fully dense order-m tensor: every one of the 4^m coefficients set. */
CoefficientTensor random_dense_tensor(std::size_t order, Rng& rng);

/** Random coefficients on exactly the given multi-indices. */
CoefficientTensor random_on_support(std::span<const MultiIndex> support,
                                    Rng& rng);

}  // namespace pauligl
