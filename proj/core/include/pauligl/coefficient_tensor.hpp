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
#include <map>

#include "pauligl/pauli.hpp"

namespace pauligl {

/** Cutoff below which coefficients are dropped unless a caller overrides it. */
inline constexpr double kDefaultTolerance = 1e-12;

/**
 * Sparse coefficients A_{mu_1...mu_m} of a 2^m x 2^m matrix in the Pauli
 * Kronecker basis.
 *
 * Storage is canonical: every key has the tensor's order, and no stored
 * value has modulus <= the tolerance it was built with. Iteration visits
 * multi-indices in lexicographic order.
 */
class CoefficientTensor {
 public:
  using Map = std::map<MultiIndex, Complex>;
  using const_iterator = Map::const_iterator;

  /** Zero tensor of the given order. */
  explicit CoefficientTensor(std::size_t order);

  /**
   * Drops entries with |value| <= tol. Throws DimensionError if any key's
   * order differs from `order`.
   */
  CoefficientTensor(std::size_t order, Map coeffs,
                    double tol = kDefaultTolerance);

  /** {(0,...,0): 1}, the coefficient form of the identity matrix. */
  static CoefficientTensor identity(std::size_t order);

  std::size_t order() const { return order_; }
  /** Side length 2^order of the represented matrix. */
  std::size_t side() const { return std::size_t{1} << order_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  /** Stored value, or zero if absent. Throws DimensionError on order mismatch. */
  Complex coefficient(const MultiIndex& idx) const;
  bool contains(const MultiIndex& idx) const { return coeffs_.contains(idx); }

  const Map& coefficients() const { return coeffs_; }
  const_iterator begin() const { return coeffs_.begin(); }
  const_iterator end() const { return coeffs_.end(); }

  friend bool operator==(const CoefficientTensor&,
                         const CoefficientTensor&) = default;

 private:
  std::size_t order_;
  Map coeffs_;
};

/** Entrywise sums drop exact zeros only; they never apply a tolerance. */
CoefficientTensor operator+(const CoefficientTensor& a,
                            const CoefficientTensor& b);
CoefficientTensor operator-(const CoefficientTensor& a,
                            const CoefficientTensor& b);
CoefficientTensor operator*(Complex scale, const CoefficientTensor& c);

/** max over the union of supports of |a(idx) - b(idx)|. */
double max_abs_difference(const CoefficientTensor& a,
                          const CoefficientTensor& b);

}  // namespace pauligl
