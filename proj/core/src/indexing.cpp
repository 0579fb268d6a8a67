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

#include "pauligl/indexing.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pauligl/errors.hpp"

namespace pauligl {

BlockCuts::BlockCuts(std::size_t row_cut, std::size_t col_cut, std::size_t n)
    : row_cut_(row_cut), col_cut_(col_cut), n_(n) {
  if (row_cut == 0 || row_cut >= n || col_cut == 0 || col_cut >= n) {
    throw DomainError("block cuts (" + std::to_string(row_cut) + ", " +
                      std::to_string(col_cut) + ") must lie strictly inside 0.." +
                      std::to_string(n));
  }
}

BlockLocal block_local_from_global(std::size_t i, std::size_t j,
                                   const BlockCuts& cuts) {
  if (i >= cuts.size() || j >= cuts.size()) {
    throw BoundsError("global index (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") outside " +
                      std::to_string(cuts.size()) + "x" +
                      std::to_string(cuts.size()));
  }
  BlockLocal local;
  if (i < cuts.row_cut()) {
    local.block_row = BlockSide::Low;
    local.row = i;
  } else {
    local.block_row = BlockSide::High;
    local.row = i - cuts.row_cut();
  }
  if (j < cuts.col_cut()) {
    local.block_col = BlockSide::Low;
    local.col = j;
  } else {
    local.block_col = BlockSide::High;
    local.col = j - cuts.col_cut();
  }
  return local;
}

std::pair<std::size_t, std::size_t> block_global_from_local(
    const BlockLocal& local, const BlockCuts& cuts) {
  if (local.row >= cuts.rows_in(local.block_row) ||
      local.col >= cuts.cols_in(local.block_col)) {
    throw BoundsError("local index (" + std::to_string(local.row) + ", " +
                      std::to_string(local.col) + ") exceeds its block");
  }
  const std::size_t i =
      local.block_row == BlockSide::Low ? local.row : cuts.row_cut() + local.row;
  const std::size_t j =
      local.block_col == BlockSide::Low ? local.col : cuts.col_cut() + local.col;
  return {i, j};
}

bool is_block_diagonal(const DenseMatrix& a, const BlockCuts& cuts,
                       double tol) {
  if (a.size() != cuts.size()) {
    throw DimensionError("is_block_diagonal: matrix side " +
                         std::to_string(a.size()) + " does not match cuts " +
                         std::to_string(cuts.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const BlockLocal local = block_local_from_global(i, j, cuts);
      if (local.block_row != local.block_col && std::abs(a(i, j)) > tol) {
        return false;
      }
    }
  }
  return true;
}

FactorShape::FactorShape(std::vector<std::size_t> sizes)
    : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw DomainError("FactorShape: no factors");
  for (std::size_t s : sizes_) {
    if (s < 2) {
      throw DomainError("FactorShape: factor size " + std::to_string(s) +
                        " is below 2");
    }
    if (total_ > std::numeric_limits<std::size_t>::max() / s) {
      throw DomainError("FactorShape: total size overflows");
    }
    total_ *= s;
  }
}

FactorShape FactorShape::qubits(std::size_t factors) {
  return FactorShape(std::vector<std::size_t>(factors, 2));
}

std::size_t lex_global_from_local(std::span<const std::size_t> locals,
                                  const FactorShape& shape) {
  if (locals.size() != shape.factors()) {
    throw BoundsError("expected " + std::to_string(shape.factors()) +
                      " local indices, got " + std::to_string(locals.size()));
  }
  std::size_t global = 0;
  for (std::size_t k = 0; k < locals.size(); ++k) {
    const std::size_t radix = shape.sizes()[k];
    if (locals[k] >= radix) {
      throw BoundsError("local index " + std::to_string(locals[k]) +
                        " out of range for factor " + std::to_string(k) +
                        " of size " + std::to_string(radix));
    }
    global = global * radix + locals[k];
  }
  return global;
}

std::vector<std::size_t> lex_local_from_global(std::size_t i,
                                               const FactorShape& shape) {
  if (i >= shape.total()) {
    throw BoundsError("global index " + std::to_string(i) +
                      " out of range for total size " +
                      std::to_string(shape.total()));
  }
  std::vector<std::size_t> locals(shape.factors());
  for (std::size_t k = shape.factors(); k-- > 0;) {
    const std::size_t radix = shape.sizes()[k];
    locals[k] = i % radix;
    i /= radix;
  }
  return locals;
}

}  // namespace pauligl
