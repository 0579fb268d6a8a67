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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pauligl/closed_forms.hpp"

namespace pauligl::cli {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;

  bool ok() const { return passed == total; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  ClosedFormReport closed_forms;
  std::vector<FormulaCheck> qvector_relations;

  /** True iff every property suite passed; formula ledger entries are ignored. */
  bool all_passed() const;
  const SuiteResult* find(const std::string& name) const;
};

/** Runs every property suite. Deterministic for a given seed. */
VerifyReport run_verify_suite(std::uint64_t seed);

/** Plain-text report; identical bytes for identical reports. */
void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace pauligl::cli
