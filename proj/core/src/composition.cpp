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

#include "pauligl/composition.hpp"

#include <algorithm>
#include <string>

#include "gl4_families.hpp"
#include "pauligl/closed_forms.hpp"
#include "pauligl/errors.hpp"

namespace pauligl {

namespace detail {

Coeffs4 load_gl4(const CoefficientTensor& c) {
  if (c.order() != 2) {
    throw DimensionError("4x4 closed form needs order-2 tensors, got order " +
                         std::to_string(c.order()));
  }
  Coeffs4 out{};
  for (const auto& [idx, v] : c) out[idx[0].value()][idx[1].value()] = v;
  return out;
}

Coeffs4 gl4_product(const Coeffs4& A, const Coeffs4& B,
                    const Gl4Reading& reading) {
  const Complex I{0.0, 1.0};
  Coeffs4 C{};

  Complex c00 = A[0][0] * B[0][0];
  for (int j = 1; j <= 3; ++j) c00 += A[j][0] * B[j][0] + A[0][j] * B[0][j];
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) c00 += A[k][l] * B[k][l];
  }
  C[0][0] = c00;

  for (int k = 1; k <= 3; ++k) {
    Complex sum = A[0][0] * B[k][0] + A[k][0] * B[0][0];
    for (int j = 1; j <= 3; ++j) sum += A[0][j] * B[k][j] + A[k][j] * B[0][j];
    Complex bracket = 0.0;
    for (int l = 1; l <= 3; ++l) {
      for (int m = 1; m <= 3; ++m) {
        const int eps = levi_civita(l, m, k);
        if (eps == 0) continue;
        Complex inner = A[l][0] * B[m][0];
        const int first = reading.ck0_bracket_letter == 'm'   ? m
                          : reading.ck0_bracket_letter == 'k' ? k
                                                              : l;
        for (int j = 1; j <= 3; ++j) inner += A[first][j] * B[m][j];
        bracket += static_cast<double>(eps) * inner;
      }
    }
    C[k][0] = sum + I * bracket;
  }

  for (int l = 1; l <= 3; ++l) {
    Complex sum = A[0][0] * B[0][l] + A[0][l] * B[0][0];
    for (int i = 1; i <= 3; ++i) sum += A[i][l] * B[i][0] + A[i][0] * B[i][l];
    Complex bracket = 0.0;
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const int eps = levi_civita(j, k, l);
        if (eps == 0) continue;
        Complex inner = A[0][j] * B[0][k];
        for (int i = 1; i <= 3; ++i) inner += A[i][j] * B[i][k];
        bracket += static_cast<double>(eps) * inner;
      }
    }
    C[0][l] = sum + I * bracket;
  }

  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      Complex sum = A[0][0] * B[i][j] + A[0][j] * B[i][0] +
                    A[i][0] * B[0][j] + A[i][j] * B[0][0];
      Complex right = 0.0;
      Complex left = 0.0;
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
          const int eps_right = reading.cij_printed_epsilon
                                    ? levi_civita(k, i, j)
                                    : levi_civita(k, l, j);
          right += static_cast<double>(eps_right) *
                   (A[i][k] * B[0][l] + A[0][k] * B[i][l]);
          left += static_cast<double>(levi_civita(k, l, i)) *
                  (A[k][j] * B[l][0] + A[k][0] * B[l][j]);
        }
      }
      Complex both = 0.0;
      for (int k = 1; k <= 3; ++k) {
        for (int m = 1; m <= 3; ++m) {
          const int eki = levi_civita(k, m, i);
          if (eki == 0) continue;
          for (int l = 1; l <= 3; ++l) {
            for (int n = 1; n <= 3; ++n) {
              const int elj = levi_civita(l, n, j);
              if (elj == 0) continue;
              both += static_cast<double>(eki * elj) * A[k][l] * B[m][n];
            }
          }
        }
      }
      C[i][j] = sum + I * right + I * left - both;
    }
  }
  return C;
}

}  // namespace detail

namespace {

void require_same_order(const CoefficientTensor& a,
                        const CoefficientTensor& b) {
  if (a.order() != b.order()) {
    throw DimensionError("compose: tensor orders differ (" +
                         std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
  }
}

CoefficientTensor to_tensor(const detail::Coeffs4& c, double tol) {
  CoefficientTensor::Map coeffs;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) coeffs.emplace(MultiIndex{mu, nu}, c[mu][nu]);
  }
  return CoefficientTensor(2, std::move(coeffs), tol);
}

const std::vector<TableEntry>& validated_antisymmetric_table() {
  static const std::vector<TableEntry> table = [] {
    const auto& published = published_antisymmetric_table();
    const auto& derived = derived_antisymmetric_table();
    const auto& checks = antisymmetric_table_checks();
    std::vector<TableEntry> out;
    out.reserve(published.size());
    for (std::size_t k = 0; k < published.size(); ++k) {
      const auto it = std::find_if(derived.begin(), derived.end(),
                                   [&](const TableEntry& e) {
                                     return e.output == published[k].output;
                                   });
      if (checks[k].verdict == Verdict::Confirmed || it == derived.end()) {
        out.push_back(published[k]);
      } else {
        out.push_back(*it);
      }
    }
    return out;
  }();
  return table;
}

void require_antisymmetric_support(const CoefficientTensor& c) {
  const auto& six = antisymmetric_gl4_support();
  for (const auto& [idx, v] : c) {
    if (std::find(six.begin(), six.end(), idx) == six.end()) {
      throw DomainError("compose_antisym_gl4: coefficient " + idx.to_string() +
                        " is outside the antisymmetric support");
    }
  }
}

}  // namespace

CoefficientTensor compose(const CoefficientTensor& a,
                          const CoefficientTensor& b, double tol) {
  require_same_order(a, b);
  CoefficientTensor::Map out;
  for (const auto& [mu, av] : a) {
    for (const auto& [nu, bv] : b) {
      const ScaledMultiIndex p = multi_product(mu, nu);
      out[p.index] += apply(p.phase, av * bv);
    }
  }
  return CoefficientTensor(a.order(), std::move(out), tol);
}

CoefficientTensor compose_gl4(const CoefficientTensor& a,
                              const CoefficientTensor& b, double tol) {
  return to_tensor(
      detail::gl4_product(detail::load_gl4(a), detail::load_gl4(b)), tol);
}

CoefficientTensor compose_antisym_gl4(const CoefficientTensor& a,
                                      const CoefficientTensor& b, double tol) {
  if (a.order() != 2 || b.order() != 2) {
    throw DimensionError("compose_antisym_gl4 needs order-2 tensors");
  }
  require_antisymmetric_support(a);
  require_antisymmetric_support(b);
  CoefficientTensor::Map out;
  for (const TableEntry& entry : validated_antisymmetric_table()) {
    Complex sum = 0.0;
    for (const BilinearTerm& t : entry.terms) {
      sum += apply(t.phase, a.coefficient(t.left) * b.coefficient(t.right));
    }
    out.emplace(entry.output, sum);
  }
  return CoefficientTensor(2, std::move(out), tol);
}

}  // namespace pauligl
