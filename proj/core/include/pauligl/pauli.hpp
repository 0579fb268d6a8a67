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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "pauligl/dense_matrix.hpp"
#include "pauligl/errors.hpp"
#include "pauligl/phase.hpp"

namespace pauligl {

/** Label of one Pauli matrix: 0 = identity, 1..3 = sigma_x, sigma_y, sigma_z. */
class PauliIndex {
 public:
  constexpr PauliIndex() = default;
  constexpr explicit PauliIndex(int value) : value_(checked(value)) {}

  constexpr int value() const { return value_; }

  friend constexpr auto operator<=>(PauliIndex, PauliIndex) = default;

 private:
  static constexpr std::uint8_t checked(int value) {
    if (value < 0 || value > 3) {
      throw DomainError("PauliIndex out of range: " + std::to_string(value));
    }
    return static_cast<std::uint8_t>(value);
  }

  std::uint8_t value_ = 0;
};

/**
 * Names one Kronecker basis element sigma_{mu_1} (x) ... (x) sigma_{mu_m}.
 *
 * Factors are packed two bits each with the leftmost factor most
 * significant, so rank() is the base-4 value of the digit string and the
 * natural ordering of equal-order indices is lexicographic.
 */
class MultiIndex {
 public:
  static constexpr std::size_t kMaxOrder = 32;

  /** Parses a digit string such as "30"; throws DomainError on bad digits. */
  explicit MultiIndex(std::string_view digits);
  MultiIndex(std::initializer_list<int> factors);
  explicit MultiIndex(std::span<const PauliIndex> factors);

  /** (0, ..., 0) of the given order. */
  static MultiIndex identity(std::size_t order);

  /** Inverse of rank(); throws BoundsError if rank >= 4^order. */
  static MultiIndex from_rank(std::uint64_t rank, std::size_t order);

  std::size_t order() const { return order_; }
  std::uint64_t rank() const { return packed_; }

  PauliIndex operator[](std::size_t k) const {
    return PauliIndex(static_cast<int>((packed_ >> shift(k)) & 3U));
  }

  /** Copy with factor k replaced. */
  MultiIndex with(std::size_t k, PauliIndex mu) const;

  /** Number of factors equal to mu. */
  std::size_t count(PauliIndex mu) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.packed_ <=> b.packed_;
  }

 private:
  MultiIndex(std::uint64_t packed, std::size_t order)
      : packed_(packed), order_(static_cast<std::uint8_t>(order)) {}

  std::size_t shift(std::size_t k) const { return 2 * (order_ - 1 - k); }
  static void check_order(std::size_t order);

  std::uint64_t packed_ = 0;
  std::uint8_t order_ = 0;
};

/** Exactly phase * sigma_{index}. */
struct ScaledMultiIndex {
  Phase phase = Phase::PlusOne;
  MultiIndex index;

  friend bool operator==(const ScaledMultiIndex&,
                         const ScaledMultiIndex&) = default;
};

/** The 2x2 Pauli matrix; all entries are exactly 0, +-1 or +-i. */
DenseMatrix pauli_matrix(PauliIndex mu);

/** sigma_mu * sigma_nu = phase * sigma_lambda, from the exact product table. */
ScaledMultiIndex single_product(PauliIndex mu, PauliIndex nu);

/**
 * Factorwise product of two basis elements of equal order:
 * (s_a1 (x) ... (x) s_am)(s_b1 (x) ... (x) s_bm) = prod_k (s_ak s_bk).
 * Throws DimensionError when the orders differ.
 */
ScaledMultiIndex multi_product(const MultiIndex& a, const MultiIndex& b);

/** Dense 2^m x 2^m Kronecker product of the factors' Pauli matrices. */
DenseMatrix basis_element(const MultiIndex& idx);

/** phase * basis_element(index). */
DenseMatrix to_dense(const ScaledMultiIndex& s);

}  // namespace pauligl
