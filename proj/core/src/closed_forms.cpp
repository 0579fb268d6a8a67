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

#include "pauligl/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "gl4_families.hpp"
#include "pauligl/composition.hpp"
#include "pauligl/random.hpp"

namespace pauligl {

namespace {

constexpr double kFamilyTolerance = 1e-12;

BilinearTerm term(Phase p, const char* left, const char* right) {
  return {p, MultiIndex(left), MultiIndex(right)};
}

std::optional<Phase> exact_phase(Complex z) {
  for (Phase p : {Phase::PlusOne, Phase::PlusI, Phase::MinusOne, Phase::MinusI}) {
    if (z == to_complex(p)) return p;
  }
  return std::nullopt;
}

CoefficientTensor unit(const MultiIndex& idx) {
  return CoefficientTensor(idx.order(), {{idx, 1.0}}, 0.0);
}

// Coefficient of A(x) B(y) in the bilinear form given by `terms`.
Complex bilinear_coefficient(const std::vector<BilinearTerm>& terms,
                             const MultiIndex& x, const MultiIndex& y) {
  Complex sum = 0.0;
  for (const BilinearTerm& t : terms) {
    if (t.left == x && t.right == y) sum += to_complex(t.phase);
  }
  return sum;
}

std::string family_name(detail::Family f) {
  switch (f) {
    case detail::Family::C00:
      return "C00";
    case detail::Family::Ck0:
      return "Ck0";
    case detail::Family::C0l:
      return "C0l";
    case detail::Family::Cij:
      return "Cij";
  }
  return "?";
}

// Per-family agreement of a closed-form reading with compose() over random
// dense 4x4 pairs.
std::array<std::size_t, 4> family_agreement(const detail::Gl4Reading& reading,
                                            std::uint64_t seed,
                                            std::size_t pairs) {
  Rng rng(seed);
  std::array<std::size_t, 4> agree{};
  for (std::size_t t = 0; t < pairs; ++t) {
    const CoefficientTensor a = random_dense_tensor(2, rng);
    const CoefficientTensor b = random_dense_tensor(2, rng);
    const detail::Coeffs4 got = detail::gl4_product(
        detail::load_gl4(a), detail::load_gl4(b), reading);
    const detail::Coeffs4 want = detail::load_gl4(compose(a, b, 0.0));
    std::array<double, 4> worst{};
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        auto& w = worst[static_cast<int>(detail::family_of(mu, nu))];
        w = std::max(w, std::abs(got[mu][nu] - want[mu][nu]));
      }
    }
    for (std::size_t f = 0; f < 4; ++f) {
      if (worst[f] <= kFamilyTolerance) ++agree[f];
    }
  }
  return agree;
}

}  // namespace

std::string_view to_string(Verdict v) {
  return v == Verdict::Confirmed ? "CONFIRMED" : "MISMATCH";
}

const std::vector<MultiIndex>& antisymmetric_gl4_support() {
  static const std::vector<MultiIndex> six = {
      MultiIndex("02"), MultiIndex("12"), MultiIndex("20"),
      MultiIndex("21"), MultiIndex("23"), MultiIndex("32"),
  };
  return six;
}

const std::vector<TableEntry>& published_antisymmetric_table() {
  using P = Phase;
  static const std::vector<TableEntry> table = {
      {MultiIndex("00"),
       "A02B02 + A12B12 + A23B23 + A20B20 + A21B21 + A32B32",
       {term(P::PlusOne, "02", "02"), term(P::PlusOne, "12", "12"),
        term(P::PlusOne, "23", "23"), term(P::PlusOne, "20", "20"),
        term(P::PlusOne, "21", "21"), term(P::PlusOne, "32", "32")}},
      {MultiIndex("01"), "A20B21 + A21B20",
       {term(P::PlusOne, "20", "21"), term(P::PlusOne, "21", "20")}},
      {MultiIndex("02"), "i(A23B21 - A21B23)",
       {term(P::PlusI, "23", "21"), term(P::MinusI, "21", "23")}},
      {MultiIndex("03"), "A20B23 + A23B20",
       {term(P::PlusOne, "20", "23"), term(P::PlusOne, "23", "20")}},
      {MultiIndex("10"), "A02B12 + A12B02",
       {term(P::PlusOne, "02", "12"), term(P::PlusOne, "12", "02")}},
      {MultiIndex("11"), "A23B32 + A32B23",
       {term(P::PlusOne, "23", "32"), term(P::PlusOne, "32", "23")}},
      {MultiIndex("12"), "i(A20B32 - A32B20)",
       {term(P::PlusI, "20", "32"), term(P::MinusI, "32", "20")}},
      {MultiIndex("13"), "-A21B32 - A32B21",
       {term(P::MinusOne, "21", "32"), term(P::MinusOne, "32", "21")}},
      {MultiIndex("20"), "i(A32B12 - A12B32)",
       {term(P::PlusI, "32", "12"), term(P::MinusI, "12", "32")}},
      // Printed with an inner i on the second term: i * (-i) = +1.
      {MultiIndex("21"), "i(A02B23 - iA23B02)",
       {term(P::PlusI, "02", "23"), term(P::PlusOne, "23", "02")}},
      {MultiIndex("22"), "A02B20 + A20B02",
       {term(P::PlusOne, "02", "20"), term(P::PlusOne, "20", "02")}},
      {MultiIndex("23"), "i(A21B02 - A02B21)",
       {term(P::PlusI, "21", "02"), term(P::MinusI, "02", "21")}},
      {MultiIndex("30"), "A02B32 + A32B02",
       {term(P::PlusOne, "02", "32"), term(P::PlusOne, "32", "02")}},
      {MultiIndex("31"), "-A12B23 - A23B12",
       {term(P::MinusOne, "12", "23"), term(P::MinusOne, "23", "12")}},
      {MultiIndex("32"), "i(A12B20 - A20B12)",
       {term(P::PlusI, "12", "20"), term(P::MinusI, "20", "12")}},
      {MultiIndex("33"), "A12B21 + A21B12",
       {term(P::PlusOne, "12", "21"), term(P::PlusOne, "21", "12")}},
  };
  return table;
}

const std::vector<TableEntry>& derived_antisymmetric_table() {
  static const std::vector<TableEntry> table = [] {
    std::vector<TableEntry> out;
    for (std::uint64_t r = 0; r < 16; ++r) {
      out.push_back({MultiIndex::from_rank(r, 2), "", {}});
    }
    const auto& six = antisymmetric_gl4_support();
    for (const MultiIndex& x : six) {
      for (const MultiIndex& y : six) {
        const CoefficientTensor c = compose(unit(x), unit(y), 0.0);
        for (const auto& [idx, v] : c) {
          // Unit products are exact; anything else would be a library bug.
          const auto phase = exact_phase(v);
          if (!phase) throw Error("non-unit structure constant at " + idx.to_string());
          out[idx.rank()].terms.push_back({*phase, x, y});
        }
      }
    }
    for (TableEntry& e : out) e.formula = format_terms(e.terms);
    return out;
  }();
  return table;
}

const std::vector<FormulaCheck>& antisymmetric_table_checks() {
  static const std::vector<FormulaCheck> checks = [] {
    std::vector<FormulaCheck> out;
    const auto& six = antisymmetric_gl4_support();
    const auto& derived = derived_antisymmetric_table();
    for (const TableEntry& entry : published_antisymmetric_table()) {
      FormulaCheck check;
      check.component = "C" + entry.output.to_string();
      check.published = entry.formula;
      for (const MultiIndex& x : six) {
        for (const MultiIndex& y : six) {
          const Complex want =
              compose(unit(x), unit(y), 0.0).coefficient(entry.output);
          ++check.trials;
          if (bilinear_coefficient(entry.terms, x, y) == want) ++check.agreeing;
        }
      }
      if (check.agreeing == check.trials) {
        check.verdict = Verdict::Confirmed;
        check.implemented = entry.formula;
      } else {
        check.verdict = Verdict::Mismatch;
        check.implemented = derived[entry.output.rank()].formula;
      }
      out.push_back(std::move(check));
    }
    return out;
  }();
  return checks;
}

std::string format_terms(const std::vector<BilinearTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const BilinearTerm& t = terms[k];
    const bool negative = t.phase == Phase::MinusOne || t.phase == Phase::MinusI;
    const bool imaginary = t.phase == Phase::PlusI || t.phase == Phase::MinusI;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (imaginary) out += "i ";
    out += "A" + t.left.to_string() + "B" + t.right.to_string();
  }
  return out;
}

ClosedFormReport verify_closed_forms(std::uint64_t seed,
                                     std::size_t random_pairs) {
  ClosedFormReport report;

  struct FamilyText {
    detail::Family family;
    const char* published;
    const char* implemented;
  };
  const FamilyText families[] = {
      {detail::Family::C00, "A00B00 + Aj0Bj0 + A0jB0j + AklBkl",
       "A00B00 + Aj0Bj0 + A0jB0j + AklBkl"},
      {detail::Family::Ck0,
       "A00Bk0 + Ak0B00 + A0jBkj + AkjB0j + i eps_lmk [Al0Bm0 + AijBmj]",
       "A00Bk0 + Ak0B00 + A0jBkj + AkjB0j + i eps_lmk [Al0Bm0 + AljBmj]"},
      {detail::Family::C0l,
       "A00B0l + A0lB00 + AilBi0 + Ai0Bil + i eps_jkl [A0jB0k + AijBik]",
       "A00B0l + A0lB00 + AilBi0 + Ai0Bil + i eps_jkl [A0jB0k + AijBik]"},
      {detail::Family::Cij,
       "A00Bij + A0jBi0 + Ai0B0j + AijB00 + i eps_kij [AikB0l + A0kBil]"
       " + i eps_kli [AkjBl0 + Ak0Blj] - eps_kmi eps_lnj AklBmn",
       "A00Bij + A0jBi0 + Ai0B0j + AijB00 + i eps_klj [AikB0l + A0kBil]"
       " + i eps_kli [AkjBl0 + Ak0Blj] - eps_kmi eps_lnj AklBmn"},
  };

  const auto implemented = family_agreement({}, seed, random_pairs);
  for (const FamilyText& f : families) {
    FormulaCheck check;
    check.component = family_name(f.family);
    check.published = f.published;
    check.implemented = f.implemented;
    check.agreeing = implemented[static_cast<int>(f.family)];
    check.trials = random_pairs;
    check.verdict = check.agreeing == check.trials ? Verdict::Confirmed
                                                   : Verdict::Mismatch;
    report.gl4_families.push_back(std::move(check));
  }

  // The printed Ck0 bracket names A_ij although i is not bound there; try
  // each bound letter. The printed Cij uses eps_kij where l is summed.
  for (char letter : {'l', 'm', 'k'}) {
    detail::Gl4Reading reading;
    reading.ck0_bracket_letter = letter;
    const auto agree = family_agreement(reading, seed, random_pairs);
    FormulaCheck check;
    check.component = "Ck0";
    check.published = "i eps_lmk [... + AijBmj]";
    check.implemented = std::string("i eps_lmk [... + A") + letter + "jBmj]";
    check.agreeing = agree[static_cast<int>(detail::Family::Ck0)];
    check.trials = random_pairs;
    check.verdict = check.agreeing == check.trials ? Verdict::Confirmed
                                                   : Verdict::Mismatch;
    report.gl4_printed_readings.push_back(std::move(check));
  }
  {
    detail::Gl4Reading reading;
    reading.cij_printed_epsilon = true;
    const auto agree = family_agreement(reading, seed, random_pairs);
    FormulaCheck check;
    check.component = "Cij";
    check.published = "i eps_kij [AikB0l + A0kBil]";
    check.implemented = "i eps_kij [AikB0l + A0kBil] taken literally";
    check.agreeing = agree[static_cast<int>(detail::Family::Cij)];
    check.trials = random_pairs;
    check.verdict = check.agreeing == check.trials ? Verdict::Confirmed
                                                   : Verdict::Mismatch;
    report.gl4_printed_readings.push_back(std::move(check));
  }

  report.antisymmetric_table = antisymmetric_table_checks();
  return report;
}

}  // namespace pauligl
