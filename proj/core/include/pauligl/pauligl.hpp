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

#include "pauligl/closed_forms.hpp"
#include "pauligl/coefficient_tensor.hpp"
#include "pauligl/composition.hpp"
#include "pauligl/decomposition.hpp"
#include "pauligl/dense_matrix.hpp"
#include "pauligl/errors.hpp"
#include "pauligl/fedorov.hpp"
#include "pauligl/indexing.hpp"
#include "pauligl/pauli.hpp"
#include "pauligl/phase.hpp"
#include "pauligl/random.hpp"
#include "pauligl/symmetry.hpp"
