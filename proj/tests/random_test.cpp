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

#include "pauligl/random.hpp"

namespace pauligl {
namespace {

TEST(RandomTensor, DistinctIndicesAtSmallOrder) {
  Rng rng(51);
  const CoefficientTensor c = random_tensor(2, 7, rng);
  EXPECT_EQ(c.size(), 7U);
  EXPECT_EQ(random_tensor(2, 100, rng).size(), 16U);
}

TEST(RandomTensor, SparseAtLargeOrders) {
  Rng rng(52);
  for (std::size_t m : {11U, 16U, 32U}) {
    const CoefficientTensor c = random_tensor(m, 64, rng);
    EXPECT_EQ(c.order(), m);
    EXPECT_EQ(c.size(), 64U);
  }
}

TEST(RandomTensor, SeedReproducible) {
  Rng a(53);
  Rng b(53);
  EXPECT_EQ(random_tensor(20, 10, a), random_tensor(20, 10, b));
  EXPECT_EQ(random_dense_tensor(2, a), random_dense_tensor(2, b));
}

TEST(RandomOnSupport, ExactlyTheGivenIndices) {
  Rng rng(54);
  const std::vector<MultiIndex> support = {MultiIndex("01"), MultiIndex("22")};
  const CoefficientTensor c = random_on_support(support, rng);
  EXPECT_EQ(c.size(), 2U);
  EXPECT_TRUE(c.contains(MultiIndex("01")));
  EXPECT_TRUE(c.contains(MultiIndex("22")));
}

}  // namespace
}  // namespace pauligl
