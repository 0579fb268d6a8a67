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

#include <gtest/gtest.h>

#include <sstream>

#include "pauligl_cli/verify_suite.hpp"

namespace pauligl::cli {
namespace {

TEST(VerifySuite, AllSuitesPass) {
  const VerifyReport report = run_verify_suite(42);
  EXPECT_TRUE(report.all_passed());
  for (const SuiteResult& s : report.suites) {
    EXPECT_TRUE(s.ok()) << s.name << ": " << s.passed << "/" << s.total;
    EXPECT_GT(s.total, 0U) << s.name;
  }
  ASSERT_NE(report.find("homomorphism m=3"), nullptr);
  EXPECT_EQ(report.find("no such suite"), nullptr);
}

TEST(VerifySuite, ReportBytesDependOnlyOnSeed) {
  std::ostringstream first;
  std::ostringstream second;
  std::ostringstream other;
  print_report(first, run_verify_suite(7));
  print_report(second, run_verify_suite(7));
  print_report(other, run_verify_suite(8));
  EXPECT_EQ(first.str(), second.str());
  EXPECT_NE(first.str(), other.str());
}

}  // namespace
}  // namespace pauligl::cli
