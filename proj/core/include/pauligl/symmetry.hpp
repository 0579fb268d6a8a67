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

#include <string_view>

#include "pauligl/coefficient_tensor.hpp"

namespace pauligl {

enum class SymmetryKind { Symmetric, Antisymmetric };

/** Overall verdict for a tensor; the zero tensor counts as Symmetric. */
enum class TensorSymmetry { Symmetric, Antisymmetric, Mixed };

std::string_view to_string(SymmetryKind kind);
std::string_view to_string(TensorSymmetry kind);

/**
 * Transposition acts factorwise and only sigma_2 changes sign, so a basis
 * element is antisymmetric iff it has an odd number of sigma_2 factors.
 */
SymmetryKind classify_basis(const MultiIndex& idx);

TensorSymmetry classify(const CoefficientTensor& c);

/** Coefficients of the transpose: c(idx) * (-1)^(number of 2s in idx). */
CoefficientTensor transpose_coeffs(const CoefficientTensor& c);

/**
 * Keeps the coefficients whose basis element has the given symmetry; the
 * coefficient form of (A + A^T)/2 or (A - A^T)/2.
 */
CoefficientTensor project(const CoefficientTensor& c, SymmetryKind kind);

}  // namespace pauligl
