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

#include "pauligl/decomposition.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "pauligl/errors.hpp"

namespace pauligl {

std::size_t order_for_side(std::size_t side) {
  if (side < 2 || !std::has_single_bit(side)) {
    throw DimensionError("matrix side " + std::to_string(side) +
                         " is not a power of two >= 2");
  }
  return static_cast<std::size_t>(std::countr_zero(side));
}

CoefficientTensor decompose(const DenseMatrix& a, double tol) {
  const std::size_t m = order_for_side(a.size());
  const std::size_t n = a.size();

  // Interleave the bits of (row, col) so that factor k owns the base-4 digit
  // 2*row_k + col_k, with factor 0 most significant.
  std::vector<Complex> work(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pos = 0;
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t bit = m - 1 - k;
        const std::size_t digit = 2 * ((row >> bit) & 1U) + ((col >> bit) & 1U);
        pos = pos * 4 + digit;
      }
      work[pos] = a(row, col);
    }
  }

  // Per factor: y_mu = 1/2 sum_{r,s} sigma_mu[s][r] x[2r+s].
  const Complex i{0.0, 1.0};
  for (std::size_t stride = 1; stride < n * n; stride *= 4) {
    for (std::size_t base = 0; base < n * n; base += 4 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        Complex* x = &work[base + off];
        const Complex x0 = x[0];
        const Complex x1 = x[stride];
        const Complex x2 = x[2 * stride];
        const Complex x3 = x[3 * stride];
        x[0] = 0.5 * (x0 + x3);
        x[stride] = 0.5 * (x1 + x2);
        x[2 * stride] = 0.5 * i * (x1 - x2);
        x[3 * stride] = 0.5 * (x0 - x3);
      }
    }
  }

  CoefficientTensor::Map coeffs;
  for (std::size_t rank = 0; rank < work.size(); ++rank) {
    if (std::abs(work[rank]) > tol) {
      coeffs.emplace_hint(coeffs.end(), MultiIndex::from_rank(rank, m),
                          work[rank]);
    }
  }
  return CoefficientTensor(m, std::move(coeffs), tol);
}

Complex trace_coefficient(const DenseMatrix& a, const MultiIndex& idx) {
  const std::size_t m = order_for_side(a.size());
  if (idx.order() != m) {
    throw DimensionError("trace_coefficient: multi-index order " +
                         std::to_string(idx.order()) + " vs matrix order " +
                         std::to_string(m));
  }
  return trace_of_product(basis_element(idx), a) /
         static_cast<double>(a.size());
}

CoefficientTensor decompose_by_trace(const DenseMatrix& a, double tol) {
  const std::size_t m = order_for_side(a.size());
  CoefficientTensor::Map coeffs;
  const std::uint64_t count = std::uint64_t{1} << (2 * m);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    const MultiIndex idx = MultiIndex::from_rank(rank, m);
    const Complex c = trace_coefficient(a, idx);
    if (std::abs(c) > tol) coeffs.emplace_hint(coeffs.end(), idx, c);
  }
  return CoefficientTensor(m, std::move(coeffs), tol);
}

DenseMatrix reconstruct(const CoefficientTensor& c) {
  const std::size_t m = c.order();
  const std::size_t n = c.side();
  DenseMatrix out(n);
  for (const auto& [idx, value] : c) {
    // A Pauli string has one nonzero per row: column = row ^ flip.
    std::size_t flip = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const int mu = idx[k].value();
      if (mu == 1 || mu == 2) flip |= std::size_t{1} << (m - 1 - k);
    }
    for (std::size_t row = 0; row < n; ++row) {
      Phase phase = Phase::PlusOne;
      for (std::size_t k = 0; k < m; ++k) {
        const bool bit = (row >> (m - 1 - k)) & 1U;
        switch (idx[k].value()) {
          case 2:
            phase *= bit ? Phase::PlusI : Phase::MinusI;
            break;
          case 3:
            if (bit) phase *= Phase::MinusOne;
            break;
          default:
            break;
        }
      }
      out(row, row ^ flip) += apply(phase, value);
    }
  }
  return out;
}

Complex trace_from_coeffs(const CoefficientTensor& c) {
  return static_cast<double>(c.side()) *
         c.coefficient(MultiIndex::identity(c.order()));
}

}  // namespace pauligl
