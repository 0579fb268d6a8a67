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

#include <stdexcept>
#include <string>

namespace pauligl {

/** Base class of every exception thrown by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Incompatible sizes or tensor orders (e.g. a side that is not 2^m). */
class DimensionError : public Error {
 public:
  using Error::Error;
};

/** Input outside the domain an operation is defined on. */
class DomainError : public Error {
 public:
  using Error::Error;
};

/** Index outside its admissible range. */
class BoundsError : public Error {
 public:
  using Error::Error;
};

}  // namespace pauligl
