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

#include <complex>
#include <cstdint>
#include <string_view>

namespace pauligl {

using Complex = std::complex<double>;

/**
 * A fourth root of unity, stored as the power of i (mod 4).
 *
 * Products of Pauli basis elements only ever pick up these four factors, so
 * structure constants are carried exactly and never rounded.
 */
enum class Phase : std::uint8_t {
  PlusOne = 0,
  PlusI = 1,
  MinusOne = 2,
  MinusI = 3,
};

constexpr Phase operator*(Phase a, Phase b) {
  return static_cast<Phase>(
      (static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 3U);
}

constexpr Phase& operator*=(Phase& a, Phase b) { return a = a * b; }

constexpr Phase conj(Phase p) {
  return static_cast<Phase>((4U - static_cast<unsigned>(p)) & 3U);
}

constexpr Complex to_complex(Phase p) {
  switch (p) {
    case Phase::PlusOne:
      return {1.0, 0.0};
    case Phase::PlusI:
      return {0.0, 1.0};
    case Phase::MinusOne:
      return {-1.0, 0.0};
    case Phase::MinusI:
      return {0.0, -1.0};
  }
  return {1.0, 0.0};
}

/** Multiplies by a phase by swapping/negating parts; no rounding occurs. */
constexpr Complex apply(Phase p, Complex z) {
  switch (p) {
    case Phase::PlusOne:
      return z;
    case Phase::PlusI:
      return {-z.imag(), z.real()};
    case Phase::MinusOne:
      return {-z.real(), -z.imag()};
    case Phase::MinusI:
      return {z.imag(), -z.real()};
  }
  return z;
}

constexpr std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::PlusOne:
      return "+1";
    case Phase::PlusI:
      return "+i";
    case Phase::MinusOne:
      return "-1";
    case Phase::MinusI:
      return "-i";
  }
  return "?";
}

}  // namespace pauligl
