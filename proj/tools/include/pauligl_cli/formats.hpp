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

// Text file formats.
//
// Matrix file (.cmat):       first line N, then N lines of N tokens "re,im".
// Coefficient file (.pcoef): first line m, then lines "D re im" where D is
//                            the multi-index as m digits 0-3.
// Q-vector file (.qvec):     one line "a1 a2 a3 b1 b2 b3".
//
// Writers emit the shortest decimal that round-trips each double, print
// -0 as 0, and list coefficients in lexicographic order, so equal values
// always produce identical bytes.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pauligl/coefficient_tensor.hpp"
#include "pauligl/dense_matrix.hpp"
#include "pauligl/errors.hpp"
#include "pauligl/fedorov.hpp"

namespace pauligl::cli {

/** Malformed file content; `line` is 1-based. */
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string format_real(double x);

/** Parses a finite decimal literal; throws ParseError naming `line`. */
double parse_real(std::string_view token, std::size_t line);

DenseMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const DenseMatrix& m);

CoefficientTensor read_coefficients(std::istream& in);
void write_coefficients(std::ostream& out, const CoefficientTensor& c);

QVector read_qvector(std::istream& in);
void write_qvector(std::ostream& out, const QVector& q);

}  // namespace pauligl::cli
