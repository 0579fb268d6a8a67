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

#include "pauligl/pauli.hpp"

#include <array>
#include <utility>

namespace pauligl {

namespace {

struct TableEntry {
  Phase phase;
  std::uint8_t result;
};

// kProductTable[mu][nu]: sigma_mu sigma_nu = phase sigma_result.
constexpr std::array<std::array<TableEntry, 4>, 4> kProductTable = {{
    {{{Phase::PlusOne, 0},
      {Phase::PlusOne, 1},
      {Phase::PlusOne, 2},
      {Phase::PlusOne, 3}}},
    {{{Phase::PlusOne, 1},
      {Phase::PlusOne, 0},
      {Phase::PlusI, 3},
      {Phase::MinusI, 2}}},
    {{{Phase::PlusOne, 2},
      {Phase::MinusI, 3},
      {Phase::PlusOne, 0},
      {Phase::PlusI, 1}}},
    {{{Phase::PlusOne, 3},
      {Phase::PlusI, 2},
      {Phase::MinusI, 1},
      {Phase::PlusOne, 0}}},
}};

}  // namespace

void MultiIndex::check_order(std::size_t order) {
  if (order == 0 || order > kMaxOrder) {
    throw DimensionError("MultiIndex order must be in 1.." +
                         std::to_string(kMaxOrder) + ", got " +
                         std::to_string(order));
  }
}

MultiIndex::MultiIndex(std::string_view digits) {
  check_order(digits.size());
  order_ = static_cast<std::uint8_t>(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '3') {
      throw DomainError("invalid Pauli digit '" + std::string(1, c) +
                        "' in multi-index \"" + std::string(digits) + "\"");
    }
    packed_ = (packed_ << 2) | static_cast<std::uint64_t>(c - '0');
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> factors) {
  check_order(factors.size());
  order_ = static_cast<std::uint8_t>(factors.size());
  for (int f : factors) {
    packed_ = (packed_ << 2) |
              static_cast<std::uint64_t>(PauliIndex(f).value());
  }
}

MultiIndex::MultiIndex(std::span<const PauliIndex> factors) {
  check_order(factors.size());
  order_ = static_cast<std::uint8_t>(factors.size());
  for (PauliIndex f : factors) {
    packed_ = (packed_ << 2) | static_cast<std::uint64_t>(f.value());
  }
}

MultiIndex MultiIndex::identity(std::size_t order) {
  check_order(order);
  return MultiIndex(0, order);
}

MultiIndex MultiIndex::from_rank(std::uint64_t rank, std::size_t order) {
  check_order(order);
  if (order < kMaxOrder && rank >> (2 * order) != 0) {
    throw BoundsError("multi-index rank " + std::to_string(rank) +
                      " out of range for order " + std::to_string(order));
  }
  return MultiIndex(rank, order);
}

MultiIndex MultiIndex::with(std::size_t k, PauliIndex mu) const {
  if (k >= order_) throw BoundsError("MultiIndex::with: factor out of range");
  const std::uint64_t mask = std::uint64_t{3} << shift(k);
  return MultiIndex(
      (packed_ & ~mask) |
          (static_cast<std::uint64_t>(mu.value()) << shift(k)),
      order_);
}

std::size_t MultiIndex::count(PauliIndex mu) const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < order_; ++k) {
    if ((*this)[k] == mu) ++n;
  }
  return n;
}

std::string MultiIndex::to_string() const {
  std::string s(order_, '0');
  for (std::size_t k = 0; k < order_; ++k) {
    s[k] = static_cast<char>('0' + (*this)[k].value());
  }
  return s;
}

DenseMatrix pauli_matrix(PauliIndex mu) {
  constexpr Complex i{0.0, 1.0};
  switch (mu.value()) {
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

ScaledMultiIndex single_product(PauliIndex mu, PauliIndex nu) {
  const TableEntry& e = kProductTable[mu.value()][nu.value()];
  return {e.phase, MultiIndex{e.result}};
}

ScaledMultiIndex multi_product(const MultiIndex& a, const MultiIndex& b) {
  if (a.order() != b.order()) {
    throw DimensionError("multi_product: tensor orders differ (" +
                         std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
  }
  Phase phase = Phase::PlusOne;
  std::uint64_t packed = 0;
  for (std::size_t k = 0; k < a.order(); ++k) {
    const TableEntry& e = kProductTable[a[k].value()][b[k].value()];
    phase *= e.phase;
    packed = (packed << 2) | e.result;
  }
  return {phase, MultiIndex::from_rank(packed, a.order())};
}

DenseMatrix basis_element(const MultiIndex& idx) {
  DenseMatrix out = pauli_matrix(idx[0]);
  for (std::size_t k = 1; k < idx.order(); ++k) {
    out = kron(out, pauli_matrix(idx[k]));
  }
  return out;
}

DenseMatrix to_dense(const ScaledMultiIndex& s) {
  return to_complex(s.phase) * basis_element(s.index);
}

}  // namespace pauligl
