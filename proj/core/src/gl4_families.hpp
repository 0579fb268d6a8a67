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

// Closed-form 4x4 product in coefficient space, split into the component
// families C00, Ck0, C0l and Cij. Indices i, j, k, l, m, n run over 1..3.

#include <array>

#include "pauligl/coefficient_tensor.hpp"

namespace pauligl::detail {

using Coeffs4 = std::array<std::array<Complex, 4>, 4>;

enum class Family { C00, Ck0, C0l, Cij };

inline Family family_of(int mu, int nu) {
  if (mu == 0) return nu == 0 ? Family::C00 : Family::C0l;
  return nu == 0 ? Family::Ck0 : Family::Cij;
}

/**
 * Selects between index-letter readings of the printed formulas.
 *
 * ck0_bracket_letter: first index of A in the term "i eps_lmk [... + A_?j B_mj]"
 * ('l', 'm' or 'k'). cij_printed_epsilon: use eps_kij (as printed) instead of
 * eps_klj in "i eps [A_ik B_0l + A_0k B_il]".
 */
struct Gl4Reading {
  char ck0_bracket_letter = 'l';
  bool cij_printed_epsilon = false;
};

inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (1, 2, 3).
  if ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) return 1;
  return -1;
}

Coeffs4 load_gl4(const CoefficientTensor& c);

Coeffs4 gl4_product(const Coeffs4& a, const Coeffs4& b,
                    const Gl4Reading& reading = {});

}  // namespace pauligl::detail
