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

#include "pauligl/symmetry.hpp"

namespace pauligl {

std::string_view to_string(SymmetryKind kind) {
  return kind == SymmetryKind::Symmetric ? "symmetric" : "antisymmetric";
}

std::string_view to_string(TensorSymmetry kind) {
  switch (kind) {
    case TensorSymmetry::Symmetric:
      return "symmetric";
    case TensorSymmetry::Antisymmetric:
      return "antisymmetric";
    case TensorSymmetry::Mixed:
      return "mixed";
  }
  return "mixed";
}

SymmetryKind classify_basis(const MultiIndex& idx) {
  return idx.count(PauliIndex(2)) % 2 == 0 ? SymmetryKind::Symmetric
                                           : SymmetryKind::Antisymmetric;
}

TensorSymmetry classify(const CoefficientTensor& c) {
  bool any_symmetric = false;
  bool any_antisymmetric = false;
  for (const auto& [idx, v] : c) {
    if (classify_basis(idx) == SymmetryKind::Symmetric) {
      any_symmetric = true;
    } else {
      any_antisymmetric = true;
    }
  }
  if (any_symmetric && any_antisymmetric) return TensorSymmetry::Mixed;
  return any_antisymmetric ? TensorSymmetry::Antisymmetric
                           : TensorSymmetry::Symmetric;
}

CoefficientTensor transpose_coeffs(const CoefficientTensor& c) {
  CoefficientTensor::Map out;
  for (const auto& [idx, v] : c) {
    out.emplace_hint(out.end(), idx,
                     classify_basis(idx) == SymmetryKind::Symmetric ? v : -v);
  }
  return CoefficientTensor(c.order(), std::move(out), 0.0);
}

CoefficientTensor project(const CoefficientTensor& c, SymmetryKind kind) {
  CoefficientTensor::Map out;
  for (const auto& [idx, v] : c) {
    if (classify_basis(idx) == kind) out.emplace_hint(out.end(), idx, v);
  }
  return CoefficientTensor(c.order(), std::move(out), 0.0);
}

}  // namespace pauligl
