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

#include "pauligl/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pauligl/errors.hpp"

namespace pauligl {

namespace {

void require_same_size(const DenseMatrix& a, const DenseMatrix& b,
                       const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": size mismatch " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), entries_(n * n) {}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw DimensionError("DenseMatrix: expected " + std::to_string(n * n) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

DenseMatrix::DenseMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) {
      throw DimensionError("DenseMatrix: ragged initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Complex DenseMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  require_same_size(*this, other, "operator+=");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  require_same_size(*this, other, "operator-=");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= other.entries_[k];
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

DenseMatrix operator*(Complex scale, DenseMatrix m) {
  m *= scale;
  return m;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  require_same_size(lhs, rhs, "operator*");
  const std::size_t n = lhs.size();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  DenseMatrix out(na * nb);
  for (std::size_t ia = 0; ia < na; ++ia) {
    for (std::size_t ja = 0; ja < na; ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < nb; ++ib) {
        for (std::size_t jb = 0; jb < nb; ++jb) {
          out(ia * nb + ib, ja * nb + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return out;
}

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_size(a, b, "max_abs_difference");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    worst = std::max(worst, std::abs(ea[k] - eb[k]));
  }
  return worst;
}

Complex trace_of_product(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_size(a, b, "trace_of_product");
  const std::size_t n = a.size();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, i);
  }
  return sum;
}

}  // namespace pauligl
