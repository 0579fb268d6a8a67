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

#include <algorithm>

#include "oracle.hpp"
#include "pauligl/closed_forms.hpp"
#include "pauligl/composition.hpp"
#include "pauligl/decomposition.hpp"
#include "pauligl/random.hpp"

namespace pauligl {
namespace {

using Map = CoefficientTensor::Map;
const Complex kI{0.0, 1.0};

CoefficientTensor unit(const char* digits, Complex value = 1.0) {
  const MultiIndex idx(digits);
  return CoefficientTensor(idx.order(), Map{{idx, value}});
}

// Independent oracle: dense product of oracle matrices, brute-force traces.
CoefficientTensor dense_oracle_product(const CoefficientTensor& a,
                                       const CoefficientTensor& b) {
  const std::size_t m = a.order();
  const std::size_t n = a.side();
  auto dense = [&](const CoefficientTensor& c) {
    oracle::Grid g(n, std::vector<Complex>(n));
    for (const auto& [idx, v] : c) {
      std::vector<int> digits;
      for (std::size_t k = 0; k < m; ++k) digits.push_back(idx[k].value());
      const auto basis = oracle::basis(digits);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) g[r][s] += v * basis[r][s];
      }
    }
    return g;
  };
  const auto product = oracle::multiply(dense(a), dense(b));
  Map out;
  for (std::size_t r = 0; r < n * n; ++r) {
    out[MultiIndex::from_rank(r, m)] =
        oracle::coefficient(product, oracle::digits_of(r, m));
  }
  return CoefficientTensor(m, std::move(out), 0.0);
}

bool supported_within(const CoefficientTensor& c, const std::vector<MultiIndex>& allowed) {
  return std::all_of(c.begin(), c.end(), [&](const auto& e) {
    return std::find(allowed.begin(), allowed.end(), e.first) != allowed.end();
  });
}

TEST(Compose, Sigma1TimesSigma2) {
  EXPECT_EQ(compose(unit("1"), unit("2")), unit("3", kI));
}

TEST(Compose, IdentityLeavesOperandUnchanged) {
  Rng rng(8);
  const CoefficientTensor b = random_tensor(2, 6, rng);
  EXPECT_EQ(compose(CoefficientTensor::identity(2), b), b);
  EXPECT_EQ(compose(b, CoefficientTensor::identity(2)), b);
}

TEST(Compose, RandomSparseMatchesDenseOracle) {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const CoefficientTensor a = random_tensor(2, 5, rng);
    const CoefficientTensor b = random_tensor(2, 5, rng);
    EXPECT_LE(max_abs_difference(compose(a, b, 0.0), dense_oracle_product(a, b)), 1e-12);
  }
}

TEST(Compose, OrderMismatchThrows) {
  EXPECT_THROW(compose(unit("1"), unit("10")), DimensionError);
}

TEST(Compose, BitReproducible) {
  Rng rng(10);
  const CoefficientTensor a = random_dense_tensor(3, rng);
  const CoefficientTensor b = random_dense_tensor(3, rng);
  EXPECT_EQ(compose(a, b), compose(a, b));
}

TEST(ComposeProperties, HomomorphismFiftyPairsPerOrder) {
  Rng rng(11);
  for (std::size_t m = 1; m <= 3; ++m) {
    std::uniform_int_distribution<std::size_t> nnz(1, std::size_t{1} << (2 * m));
    for (int t = 0; t < 50; ++t) {
      const CoefficientTensor a = random_tensor(m, nnz(rng), rng);
      const CoefficientTensor b = random_tensor(m, nnz(rng), rng);
      const CoefficientTensor want = decompose(reconstruct(a) * reconstruct(b), 0.0);
      ASSERT_LE(max_abs_difference(compose(a, b, 0.0), want), 1e-10);
    }
  }
}

TEST(ComposeProperties, Associativity) {
  Rng rng(12);
  for (std::size_t m = 1; m <= 2; ++m) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_dense_tensor(m, rng);
      const auto b = random_dense_tensor(m, rng);
      const auto c = random_dense_tensor(m, rng);
      ASSERT_LE(max_abs_difference(compose(compose(a, b), c), compose(a, compose(b, c))),
                1e-10);
    }
  }
}

TEST(ComposeProperties, ClosedClasses) {
  Rng rng(13);
  const std::vector<MultiIndex> left = {MultiIndex("00"), MultiIndex("10"),
                                        MultiIndex("20"), MultiIndex("30")};
  const std::vector<MultiIndex> right = {MultiIndex("00"), MultiIndex("01"),
                                         MultiIndex("02"), MultiIndex("03")};
  for (int t = 0; t < 100; ++t) {
    ASSERT_TRUE(supported_within(
        compose(random_on_support(left, rng), random_on_support(left, rng)), left));
    ASSERT_TRUE(supported_within(
        compose(random_on_support(right, rng), random_on_support(right, rng)), right));
  }
}

TEST(ComposeProperties, AntisymmetricSupportIsNotClosed) {
  // (s2 (x) I)(s2 (x) s1) = I (x) s1.
  const CoefficientTensor c = compose(unit("20"), unit("21"));
  EXPECT_EQ(c, unit("01"));
  EXPECT_FALSE(supported_within(c, antisymmetric_gl4_support()));
}

TEST(ComposeGl4, Examples) {
  EXPECT_EQ(compose_gl4(unit("10"), unit("20")), unit("30", kI));
  EXPECT_EQ(compose_gl4(unit("00"), unit("03", 5.0)), unit("03", 5.0));
}

TEST(ComposeGl4, AgreesWithGeneralPath) {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_dense_tensor(2, rng);
    const auto b = random_dense_tensor(2, rng);
    ASSERT_LE(max_abs_difference(compose_gl4(a, b, 0.0), compose(a, b, 0.0)), 1e-12);
  }
}

TEST(ComposeGl4, RequiresOrderTwo) {
  EXPECT_THROW(compose_gl4(unit("1"), unit("2")), DimensionError);
  EXPECT_THROW(compose_gl4(unit("100"), unit("200")), DimensionError);
}

TEST(ComposeAntisymGl4, Examples) {
  EXPECT_EQ(compose_antisym_gl4(unit("20"), unit("20")), unit("00"));
  const CoefficientTensor c = compose_antisym_gl4(unit("20"), unit("21"));
  EXPECT_EQ(c.coefficient(MultiIndex("01")), Complex(1.0));
}

TEST(ComposeAntisymGl4, AllUnitPairsMatchBruteForce) {
  for (const MultiIndex& x : antisymmetric_gl4_support()) {
    for (const MultiIndex& y : antisymmetric_gl4_support()) {
      const CoefficientTensor a(2, Map{{x, 1.0}});
      const CoefficientTensor b(2, Map{{y, 1.0}});
      EXPECT_EQ(compose_antisym_gl4(a, b), dense_oracle_product(a, b))
          << x.to_string() << " * " << y.to_string();
    }
  }
}

TEST(ComposeAntisymGl4, RandomMatchesGeneralPath) {
  Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_on_support(antisymmetric_gl4_support(), rng);
    const auto b = random_on_support(antisymmetric_gl4_support(), rng);
    ASSERT_LE(max_abs_difference(compose_antisym_gl4(a, b, 0.0), compose(a, b, 0.0)),
              1e-12);
  }
}

TEST(ComposeAntisymGl4, Errors) {
  EXPECT_THROW(compose_antisym_gl4(unit("11"), unit("20")), DomainError);
  EXPECT_THROW(compose_antisym_gl4(unit("20"), unit("00")), DomainError);
  EXPECT_THROW(compose_antisym_gl4(unit("2"), unit("2")), DimensionError);
}

}  // namespace
}  // namespace pauligl
