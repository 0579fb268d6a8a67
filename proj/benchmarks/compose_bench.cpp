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

#include <benchmark/benchmark.h>

#include "pauligl/composition.hpp"
#include "pauligl/decomposition.hpp"
#include "pauligl/random.hpp"

namespace {

// Sparse operands: args are (order, nonzeros per operand).
void BM_ComposeSparse(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto nnz = static_cast<std::size_t>(state.range(1));
  pauligl::Rng rng(2);
  const auto a = pauligl::random_tensor(m, nnz, rng);
  const auto b = pauligl::random_tensor(m, nnz, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pauligl::compose(a, b));
}
BENCHMARK(BM_ComposeSparse)->Args({4, 8})->Args({8, 8})->Args({8, 64})->Args({16, 64});

// Same product through dense matrices, for comparison at small orders.
void BM_ComposeViaDense(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto nnz = static_cast<std::size_t>(state.range(1));
  pauligl::Rng rng(2);
  const auto a = pauligl::random_tensor(m, nnz, rng);
  const auto b = pauligl::random_tensor(m, nnz, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pauligl::decompose(pauligl::reconstruct(a) * pauligl::reconstruct(b)));
  }
}
BENCHMARK(BM_ComposeViaDense)->Args({4, 8})->Args({6, 8});

void BM_ComposeGl4(benchmark::State& state) {
  pauligl::Rng rng(3);
  const auto a = pauligl::random_dense_tensor(2, rng);
  const auto b = pauligl::random_dense_tensor(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pauligl::compose_gl4(a, b));
}
BENCHMARK(BM_ComposeGl4);

void BM_ComposeGeneralOrderTwo(benchmark::State& state) {
  pauligl::Rng rng(3);
  const auto a = pauligl::random_dense_tensor(2, rng);
  const auto b = pauligl::random_dense_tensor(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pauligl::compose(a, b));
}
BENCHMARK(BM_ComposeGeneralOrderTwo);

}  // namespace
