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

#include "pauligl/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "pauligl/errors.hpp"

namespace pauligl {

Complex random_complex(Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double re = dist(rng);
  const double im = dist(rng);
  return {re, im};
}

DenseMatrix random_matrix(std::size_t n, Rng& rng) {
  std::vector<Complex> entries(n * n);
  for (auto& e : entries) e = random_complex(rng);
  return DenseMatrix(n, std::move(entries));
}

CoefficientTensor random_tensor(std::size_t order, std::size_t nnz, Rng& rng) {
  // Rank space is 4^order; order 32 fills all 64 bits.
  const std::uint64_t max_rank =
      order >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * order)) - 1;
  if (max_rank < ~std::uint64_t{0} && nnz > max_rank) {
    return random_dense_tensor(order, rng);
  }
  CoefficientTensor::Map coeffs;
  if (max_rank < (std::uint64_t{1} << 20)) {
    // Partial Fisher-Yates over the whole rank space.
    std::vector<std::uint64_t> ranks(max_rank + 1);
    std::iota(ranks.begin(), ranks.end(), std::uint64_t{0});
    for (std::size_t k = 0; k < nnz; ++k) {
      std::uniform_int_distribution<std::uint64_t> pick(k, max_rank);
      std::swap(ranks[k], ranks[pick(rng)]);
    }
    for (std::size_t k = 0; k < nnz; ++k) {
      coeffs.emplace(MultiIndex::from_rank(ranks[k], order), random_complex(rng));
    }
  } else {
    // Sparse draw from a huge space: rejection on repeats is cheap.
    std::uniform_int_distribution<std::uint64_t> pick(0, max_rank);
    while (coeffs.size() < nnz) {
      const MultiIndex idx = MultiIndex::from_rank(pick(rng), order);
      if (!coeffs.contains(idx)) coeffs.emplace(idx, random_complex(rng));
    }
  }
  return CoefficientTensor(order, std::move(coeffs), 0.0);
}

CoefficientTensor random_dense_tensor(std::size_t order, Rng& rng) {
  const std::uint64_t total = std::uint64_t{1} << (2 * order);
  CoefficientTensor::Map coeffs;
  for (std::uint64_t r = 0; r < total; ++r) {
    coeffs.emplace_hint(coeffs.end(), MultiIndex::from_rank(r, order),
                        random_complex(rng));
  }
  return CoefficientTensor(order, std::move(coeffs), 0.0);
}

CoefficientTensor random_on_support(std::span<const MultiIndex> support,
                                    Rng& rng) {
  if (support.empty()) throw DomainError("random_on_support: empty support");
  CoefficientTensor::Map coeffs;
  for (const MultiIndex& idx : support) coeffs[idx] = random_complex(rng);
  return CoefficientTensor(support.front().order(), std::move(coeffs), 0.0);
}

}  // namespace pauligl
