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

#include "pauligl_cli/formats.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <optional>
#include <vector>

namespace pauligl::cli {

namespace {

// Reads lines, tracking the 1-based number of the line last returned.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::size_t number() const { return number_; }

  /** Fails unless only blank lines remain. */
  void expect_end() {
    std::string line;
    while (next(line)) {
      if (line.find_first_not_of(" \t") != std::string::npos) {
        throw ParseError(number_, "unexpected trailing content");
      }
    }
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line,
                        const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got \"" +
                               std::string(token) + "\"");
  }
  return value;
}

std::size_t read_header(LineReader& reader, const char* what) {
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty file");
  const auto tokens = split_ws(line);
  if (tokens.size() != 1) {
    throw ParseError(reader.number(), std::string("header must be a single ") + what);
  }
  return parse_count(tokens[0], reader.number(), what);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string format_real(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

double parse_real(std::string_view token, std::size_t line) {
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size()) {
    throw ParseError(line, "invalid number \"" + std::string(token) + "\"");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite number \"" + std::string(token) + "\"");
  }
  return value;
}

DenseMatrix read_matrix(std::istream& in) {
  LineReader reader(in);
  const std::size_t n = read_header(reader, "matrix size");
  if (n == 0) throw ParseError(1, "matrix size must be positive");
  std::vector<Complex> entries;
  entries.reserve(n * n);
  std::string line;
  for (std::size_t row = 0; row < n; ++row) {
    if (!reader.next(line)) {
      throw ParseError(reader.number() + 1,
                       "expected " + std::to_string(n) + " matrix rows, got " +
                           std::to_string(row));
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != n) {
      throw ParseError(reader.number(), "expected " + std::to_string(n) +
                                            " entries, got " +
                                            std::to_string(tokens.size()));
    }
    for (std::string_view token : tokens) {
      const std::size_t comma = token.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError(reader.number(),
                         "entry \"" + std::string(token) + "\" is not re,im");
      }
      entries.emplace_back(parse_real(token.substr(0, comma), reader.number()),
                           parse_real(token.substr(comma + 1), reader.number()));
    }
  }
  reader.expect_end();
  return DenseMatrix(n, std::move(entries));
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != 0) out << ' ';
      out << format_real(m(i, j).real()) << ',' << format_real(m(i, j).imag());
    }
    out << '\n';
  }
}

CoefficientTensor read_coefficients(std::istream& in) {
  LineReader reader(in);
  const std::size_t m = read_header(reader, "tensor order");
  if (m == 0 || m > MultiIndex::kMaxOrder) {
    throw ParseError(1, "tensor order must be in 1.." +
                            std::to_string(MultiIndex::kMaxOrder));
  }
  CoefficientTensor::Map coeffs;
  std::string line;
  while (reader.next(line)) {
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ParseError(reader.number(), "expected \"D re im\"");
    }
    if (tokens[0].size() != m) {
      throw ParseError(reader.number(),
                       "multi-index \"" + std::string(tokens[0]) + "\" has " +
                           std::to_string(tokens[0].size()) +
                           " digits, expected " + std::to_string(m));
    }
    std::optional<MultiIndex> idx;
    try {
      idx.emplace(tokens[0]);
    } catch (const DomainError& e) {
      throw ParseError(reader.number(), e.what());
    }
    const Complex value(parse_real(tokens[1], reader.number()),
                        parse_real(tokens[2], reader.number()));
    if (!coeffs.emplace(*idx, value).second) {
      throw ParseError(reader.number(),
                       "duplicate multi-index " + idx->to_string());
    }
  }
  return CoefficientTensor(m, std::move(coeffs), 0.0);
}

void write_coefficients(std::ostream& out, const CoefficientTensor& c) {
  out << c.order() << '\n';
  for (const auto& [idx, v] : c) {
    out << idx.to_string() << ' ' << format_real(v.real()) << ' '
        << format_real(v.imag()) << '\n';
  }
}

QVector read_qvector(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty file");
  const auto tokens = split_ws(line);
  if (tokens.size() != 6) {
    throw ParseError(1, "expected six numbers \"a1 a2 a3 b1 b2 b3\", got " +
                            std::to_string(tokens.size()));
  }
  QVector q;
  for (std::size_t k = 0; k < 3; ++k) {
    q.a[k] = parse_real(tokens[k], 1);
    q.b[k] = parse_real(tokens[k + 3], 1);
  }
  reader.expect_end();
  return q;
}

void write_qvector(std::ostream& out, const QVector& q) {
  out << format_real(q.a[0]) << ' ' << format_real(q.a[1]) << ' '
      << format_real(q.a[2]) << ' ' << format_real(q.b[0]) << ' '
      << format_real(q.b[1]) << ' ' << format_real(q.b[2]) << '\n';
}

}  // namespace pauligl::cli
