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

// Brute-force reference computations used only by tests. Nothing here calls
// into the library's Pauli tables, Kronecker product, decomposition or
// product code, so agreement is an independent check.

#include <complex>
#include <cstddef>
#include <vector>

#include "pauligl/dense_matrix.hpp"

namespace pauligl::oracle {

using C = std::complex<double>;
using Grid = std::vector<std::vector<C>>;

inline Grid pauli(int mu) {
  const C i{0.0, 1.0};
  switch (mu) {
    case 0:
      return {{1.0, 0.0}, {0.0, 1.0}};
    case 1:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case 2:
      return {{0.0, -i}, {i, 0.0}};
    default:
      return {{1.0, 0.0}, {0.0, -1.0}};
  }
}

inline Grid kron(const Grid& a, const Grid& b) {
  const std::size_t na = a.size(), nb = b.size();
  Grid out(na * nb, std::vector<C>(na * nb));
  for (std::size_t r = 0; r < na * nb; ++r) {
    for (std::size_t c = 0; c < na * nb; ++c) {
      out[r][c] = a[r / nb][c / nb] * b[r % nb][c % nb];
    }
  }
  return out;
}

inline Grid multiply(const Grid& a, const Grid& b) {
  const std::size_t n = a.size();
  Grid out(n, std::vector<C>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < n; ++k) out[r][c] += a[r][k] * b[k][c];
    }
  }
  return out;
}

/** Basis element for digits given left to right. */
inline Grid basis(const std::vector<int>& digits) {
  Grid out = pauli(digits.front());
  for (std::size_t k = 1; k < digits.size(); ++k) out = kron(out, pauli(digits[k]));
  return out;
}

/** 2^-m sum_{r,c} basis[c][r] a[r][c]. */
inline C coefficient(const Grid& a, const std::vector<int>& digits) {
  const Grid b = basis(digits);
  C sum = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) sum += b[c][r] * a[r][c];
  }
  return sum / static_cast<double>(a.size());
}

inline Grid from_dense(const DenseMatrix& m) {
  Grid out(m.size(), std::vector<C>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

inline DenseMatrix to_dense(const Grid& g) {
  DenseMatrix m(g.size());
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g.size(); ++c) m(r, c) = g[r][c];
  }
  return m;
}

/** Digits of rank in base 4, most significant first. */
inline std::vector<int> digits_of(std::size_t rank, std::size_t m) {
  std::vector<int> d(m);
  for (std::size_t k = m; k-- > 0;) {
    d[k] = static_cast<int>(rank % 4);
    rank /= 4;
  }
  return d;
}

}  // namespace pauligl::oracle
