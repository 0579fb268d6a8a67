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
#include <initializer_list>
#include <span>
#include <vector>

#include "pauligl/phase.hpp"

namespace pauligl {

/**
 * Square complex matrix stored row-major: the standard representation in
 * which every entry is the coefficient of one matrix unit e_i (x) e_j.
 */
class DenseMatrix {
 public:
  DenseMatrix() = default;

  /** n x n zero matrix. */
  explicit DenseMatrix(std::size_t n);

  /** Takes ownership of n*n row-major entries; throws DimensionError otherwise. */
  DenseMatrix(std::size_t n, std::vector<Complex> entries);

  /** Nested-list literal, e.g. {{1, 0}, {0, 1}}. Rows must all have length n. */
  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * n_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }

  std::span<const Complex> entries() const { return entries_; }

  DenseMatrix transpose() const;
  Complex trace() const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(Complex scale);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> entries_;
};

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator*(Complex scale, DenseMatrix m);

/** Matrix product; throws DimensionError on size mismatch. */
DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);

/**
 * Kronecker product. With 0-based indices, entry
 * (iA*nB + iB, jA*nB + jB) equals A(iA, jA) * B(iB, jB): the left factor
 * varies slowest.
 */
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/** Largest entrywise modulus of a - b; throws DimensionError on size mismatch. */
double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);

/** Tr(a * b) without forming the product. */
Complex trace_of_product(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace pauligl
