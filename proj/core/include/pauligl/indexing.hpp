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

// Maps between global matrix-entry numbering and local numberings.
//
// Two-block partition: cutting rows at row_cut and columns at col_cut splits
// an N x N matrix into four blocks. Local coordinates inside a block are an
// affine shift of the global ones. In 1-based terms a row i <= i' stays k = i,
// and a row i > i' becomes m = i - i'; the same holds for columns.
//
// Lexicographic (mixed-radix) map: for a Kronecker product of factors with
// sizes (n_1, ..., n_r), listed left to right, the global index is
//   i = ((i_1 * n_2 + i_2) * n_3 + ...) * n_r + i_r      (0-based)
// so the rightmost factor varies fastest. This is the 1-based formula
// i = n^(r-1)...n'(i^(r) - 1) + ... + n'(i'' - 1) + i' after shifting every
// index down by one.
//
// Every public map here is 0-based.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pauligl/dense_matrix.hpp"

namespace pauligl {

enum class BlockSide { Low, High };

/** Row and column cut points of a two-block partition of an n x n matrix. */
class BlockCuts {
 public:
  /** Throws DomainError unless 0 < row_cut < n and 0 < col_cut < n. */
  BlockCuts(std::size_t row_cut, std::size_t col_cut, std::size_t n);

  std::size_t row_cut() const { return row_cut_; }
  std::size_t col_cut() const { return col_cut_; }
  std::size_t size() const { return n_; }

  std::size_t rows_in(BlockSide side) const {
    return side == BlockSide::Low ? row_cut_ : n_ - row_cut_;
  }
  std::size_t cols_in(BlockSide side) const {
    return side == BlockSide::Low ? col_cut_ : n_ - col_cut_;
  }

 private:
  std::size_t row_cut_;
  std::size_t col_cut_;
  std::size_t n_;
};

/** A block id plus the row/column position inside that block. */
struct BlockLocal {
  BlockSide block_row = BlockSide::Low;
  BlockSide block_col = BlockSide::Low;
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const BlockLocal&, const BlockLocal&) = default;
};

/** Throws BoundsError if i or j >= n. */
BlockLocal block_local_from_global(std::size_t i, std::size_t j,
                                   const BlockCuts& cuts);

/** Throws BoundsError if the local position exceeds its block. */
std::pair<std::size_t, std::size_t> block_global_from_local(
    const BlockLocal& local, const BlockCuts& cuts);

/** True when both off-diagonal blocks have every |entry| <= tol. */
bool is_block_diagonal(const DenseMatrix& a, const BlockCuts& cuts,
                       double tol = 0.0);

/** Sizes of the Kronecker factors, left to right; each size is >= 2. */
class FactorShape {
 public:
  /** Throws DomainError on an empty list or any size < 2. */
  explicit FactorShape(std::vector<std::size_t> sizes);

  /** (2, ..., 2) with the given number of factors. */
  static FactorShape qubits(std::size_t factors);

  std::span<const std::size_t> sizes() const { return sizes_; }
  std::size_t factors() const { return sizes_.size(); }
  std::size_t total() const { return total_; }

 private:
  std::vector<std::size_t> sizes_;
  std::size_t total_ = 1;
};

/** Throws BoundsError on arity mismatch or a local index out of range. */
std::size_t lex_global_from_local(std::span<const std::size_t> locals,
                                  const FactorShape& shape);

/** Throws BoundsError if i >= shape.total(). */
std::vector<std::size_t> lex_local_from_global(std::size_t i,
                                               const FactorShape& shape);

}  // namespace pauligl
