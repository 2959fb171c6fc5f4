#ifndef ULGCOX_TYPEA_HPP
#define ULGCOX_TYPEA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ulg/word.hpp"

namespace ulg {

enum class LabelClassTag : std::uint8_t {
  type_i,
  type_ii,
  type_iii_a,
  type_iii_b,
  not_ulg,
};

std::string to_string(LabelClassTag tag);

// Classification of a chain-diagram label. Indices are 1-based generator
// positions; the support interval [lo, hi] is (0, 0) for the zero label.
// The canonical reading direction starts at the single leading 1; `reversed`
// records when that direction is right-to-left.
struct LabelClass {
  LabelClassTag tag = LabelClassTag::not_ulg;
  std::size_t support_lo = 0;
  std::size_t support_hi = 0;
  bool reversed = false;
  // Type II: position of the last 2 in the canonical direction, and the
  // number of trailing 1s after the 2-block.
  std::size_t two_block_end = 0;
  std::size_t trailing_ones = 0;
  // Type III(a): end of the first 2-block and start of the second one.
  std::size_t first_two_end = 0;
  std::size_t second_two_start = 0;
  // Type III(b): the 3-block interval.
  std::size_t three_lo = 0;
  std::size_t three_hi = 0;
};

// Support grammar on the nonzero values, read from the single leading 1 (up
// to reversal): all ones; 1 then 2s then optional 1s; 1,2s,1s,2s,1; or
// 1, optional 2s, 3s, optional 2s, 1. Anything else carries coefficient 0.
LabelClass classify_label(std::size_t n, const LabelVector& label);

// Closed-form coefficient of a chain-diagram label: 1, 2, 4 or 2(m-l)
// depending on the class and its parameters; 0 when not a u.l.g. label.
std::uint64_t typea_coefficient(std::size_t n, const LabelVector& label);

// Number of nonzero coefficients in the rank-n generating function,
// constant term included: (n^4 - 2n^3 + 17n^2 - 4n + 12) / 12, evaluated
// exactly with an integrality assertion.
std::uint64_t nonzero_coefficient_count(std::size_t n);

struct UlgTotal {
  // The piecewise closed form: 6 for n = 2, 19 for n = 3, a quartic for
  // n >= 4. Kept for comparison reporting.
  std::uint64_t closed_form;
  // Exact total obtained by summing the per-class coefficient families.
  std::uint64_t enumerated;
};

// Total number of u.l.g.'s in rank n. The two fields disagree for some n;
// reports print both rather than papering over the difference.
UlgTotal total_ulg_count(std::size_t n, bool include_identity);

// Elements of the rank-n chain group with a unique reduced expression: n^2+1.
std::uint64_t unique_geodesic_count(std::size_t n);

// Largest total degree carrying a nonzero coefficient: 3n - 4 (n >= 2).
// Degenerate at n = 2, where the true maximum is 3.
std::uint64_t max_ulg_length(std::size_t n);

struct TypeAReportRow {
  std::size_t n = 0;
  std::uint64_t nonzero_count_formula = 0;
  std::uint64_t nonzero_count_oracle = 0;
  std::uint64_t total_formula = 0;  // closed form, identity excluded
  std::uint64_t total_oracle = 0;   // census value, identity excluded
  std::uint64_t unique_geodesics = 0;
  std::uint64_t max_length = 0;
  bool oracle_matches = false;  // nonzero count and unique-geodesic agreement
};

// Runs a full census of the rank-n chain group and compares it with the
// closed forms. Total-count differences are recorded, not failed.
TypeAReportRow typea_report_row(std::size_t n, unsigned threads = 1);

std::string format_typea_report(const std::vector<TypeAReportRow>& rows);

}  // namespace ulg

#endif
