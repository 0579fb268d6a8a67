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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pauligl/phase.hpp"
#include "pauligl/pauli.hpp"

namespace pauligl {

enum class Verdict { Confirmed, Mismatch };

std::string_view to_string(Verdict v);

/** Outcome of checking one published formula against the general product. */
struct FormulaCheck {
  std::string component;
  std::string published;
  /**
   * Formula the library evaluates (the correction on mismatch). For
   * alternative readings of a printed formula, the reading that was tried.
   */
  std::string implemented;
  Verdict verdict = Verdict::Confirmed;
  std::size_t agreeing = 0;
  std::size_t trials = 0;
};

/** One term phase * A(left) * B(right) of a bilinear component formula. */
struct BilinearTerm {
  Phase phase;
  MultiIndex left;
  MultiIndex right;
};

/** Component `output` of C = AB as a sum of bilinear terms. */
struct TableEntry {
  MultiIndex output;
  std::string formula;
  std::vector<BilinearTerm> terms;
};

/** The six order-2 multi-indices spanning antisymmetric 4x4 matrices. */
const std::vector<MultiIndex>& antisymmetric_gl4_support();

/** The printed 16-entry table for products of antisymmetric 4x4 matrices. */
const std::vector<TableEntry>& published_antisymmetric_table();

/** The same table derived term by term from compose() on unit inputs. */
const std::vector<TableEntry>& derived_antisymmetric_table();

/**
 * Each published entry compared with compose() on all 36 single-component
 * input pairs. Computed once and cached.
 */
const std::vector<FormulaCheck>& antisymmetric_table_checks();

/** Human-readable rendering of a term list, e.g. "i A02B23 - i A23B02". */
std::string format_terms(const std::vector<BilinearTerm>& terms);

struct ClosedFormReport {
  /** The four 4x4 component families as implemented by compose_gl4. */
  std::vector<FormulaCheck> gl4_families;
  /** Index-letter readings of the printed 4x4 families that are ambiguous. */
  std::vector<FormulaCheck> gl4_printed_readings;
  /** The 16 antisymmetric table entries. */
  std::vector<FormulaCheck> antisymmetric_table;
};

/**
 * Validates the closed-form product paths against compose(): random dense
 * pairs for the 4x4 families, exhaustive unit pairs for the antisymmetric
 * table. Deterministic for a given seed.
 */
ClosedFormReport verify_closed_forms(std::uint64_t seed = 0,
                                     std::size_t random_pairs = 100);

}  // namespace pauligl
