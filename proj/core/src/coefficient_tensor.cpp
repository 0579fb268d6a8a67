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

#include "pauligl/coefficient_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pauligl {

namespace {

void require_same_order(const CoefficientTensor& a, const CoefficientTensor& b,
                        const char* what) {
  if (a.order() != b.order()) {
    throw DimensionError(std::string(what) + ": tensor orders differ (" +
                         std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
  }
}

CoefficientTensor combine(const CoefficientTensor& a, Complex sa,
                          const CoefficientTensor& b, Complex sb) {
  CoefficientTensor::Map sum;
  for (const auto& [idx, v] : a) sum[idx] += sa * v;
  for (const auto& [idx, v] : b) sum[idx] += sb * v;
  return CoefficientTensor(a.order(), std::move(sum), 0.0);
}

}  // namespace

CoefficientTensor::CoefficientTensor(std::size_t order) : order_(order) {
  // Validates the order the same way multi-indices do.
  (void)MultiIndex::identity(order);
}

CoefficientTensor::CoefficientTensor(std::size_t order, Map coeffs, double tol)
    : CoefficientTensor(order) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->first.order() != order) {
      throw DimensionError("coefficient " + it->first.to_string() +
                           " has order " + std::to_string(it->first.order()) +
                           ", expected " + std::to_string(order));
    }
    if (std::abs(it->second) <= tol) {
      it = coeffs.erase(it);
    } else {
      ++it;
    }
  }
  coeffs_ = std::move(coeffs);
}

CoefficientTensor CoefficientTensor::identity(std::size_t order) {
  return CoefficientTensor(order, {{MultiIndex::identity(order), 1.0}});
}

Complex CoefficientTensor::coefficient(const MultiIndex& idx) const {
  if (idx.order() != order_) {
    throw DimensionError("coefficient lookup with order " +
                         std::to_string(idx.order()) + " in tensor of order " +
                         std::to_string(order_));
  }
  const auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Complex{} : it->second;
}

CoefficientTensor operator+(const CoefficientTensor& a,
                            const CoefficientTensor& b) {
  require_same_order(a, b, "operator+");
  return combine(a, 1.0, b, 1.0);
}

CoefficientTensor operator-(const CoefficientTensor& a,
                            const CoefficientTensor& b) {
  require_same_order(a, b, "operator-");
  return combine(a, 1.0, b, -1.0);
}

CoefficientTensor operator*(Complex scale, const CoefficientTensor& c) {
  return combine(c, scale, CoefficientTensor(c.order()), 0.0);
}

double max_abs_difference(const CoefficientTensor& a,
                          const CoefficientTensor& b) {
  require_same_order(a, b, "max_abs_difference");
  double worst = 0.0;
  for (const auto& [idx, v] : a) {
    worst = std::max(worst, std::abs(v - b.coefficient(idx)));
  }
  for (const auto& [idx, v] : b) {
    if (!a.contains(idx)) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace pauligl
