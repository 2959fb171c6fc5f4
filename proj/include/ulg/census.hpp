#ifndef ULGCOX_CENSUS_HPP
#define ULGCOX_CENSUS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ulg/diagram.hpp"
#include "ulg/element.hpp"
#include "ulg/word.hpp"

namespace ulg {

// Geodesic counts are exact arbitrary-size integers; reduced-word counts grow
// factorially in type A, so a fixed width would silently corrupt.
using Count = mpz_class;

// Sparse generating function truncated at total degree `radius`. Coefficient
// of a label = number of elements whose geodesic with that label is unique.
struct LabelPolynomial {
  std::map<LabelVector, std::uint64_t> coefficients;
  std::uint64_t radius = 0;
  bool complete = false;
  std::string diagram_name;

  std::uint64_t coefficient(const LabelVector& label) const {
    auto it = coefficients.find(label);
    return it == coefficients.end() ? 0 : it->second;
  }
  // U_C(1,...,1) truncated at the radius.
  std::uint64_t sum_of_coefficients() const {
    std::uint64_t s = 0;
    for (const auto& [label, c] : coefficients) s += c;
    return s;
  }
  bool operator==(const LabelPolynomial& other) const {
    return coefficients == other.coefficients && radius == other.radius &&
           complete == other.complete;
  }
};

struct CensusOptions {
  std::uint64_t radius = 0;
  bool keep_levels = true;    // retain per-element count maps for queries
  unsigned threads = 1;       // level expansion shards
  std::uint64_t max_pairs = 50'000'000;  // (element,label) budget
};

// Per-(element,label) geodesic counts for the ball of a given radius,
// computed level-synchronously: counts at level k derive only from level k-1,
// so every label of total degree <= radius is exact even in infinite groups.
class GeodesicCensus {
 public:
  using Record = std::map<LabelVector, Count>;
  using Level = std::unordered_map<GroupElement, Record, ElementHash>;

  GeodesicCensus(const CoxeterDiagram& d, const CensusOptions& options);

  const CoxeterDiagram& diagram() const { return diagram_; }
  std::uint64_t radius() const { return radius_; }
  bool complete() const { return complete_; }
  bool levels_kept() const { return keep_levels_; }

  std::uint64_t element_count() const { return element_count_; }
  const std::vector<std::uint64_t>& level_sizes() const { return level_sizes_; }

  // Geodesic count of (element, label); 0 if outside the ball or mismatched.
  Count count(const GroupElement& e, const LabelVector& label) const;

  // Requires keep_levels.
  const std::vector<Level>& levels() const;

  const LabelPolynomial& series() const { return series_; }

  // Elements with exactly one reduced expression in total (identity counts).
  std::uint64_t unique_expression_elements() const {
    return unique_expression_elements_;
  }

 private:
  CoxeterDiagram diagram_;
  std::uint64_t radius_;
  bool keep_levels_;
  bool complete_ = false;
  std::uint64_t element_count_ = 0;
  std::uint64_t unique_expression_elements_ = 0;
  std::vector<std::uint64_t> level_sizes_;
  std::vector<Level> levels_;
  LabelPolynomial series_;
};

GeodesicCensus ball_census(const CoxeterDiagram& d, std::uint64_t radius,
                           unsigned threads = 1, bool keep_levels = true);

LabelPolynomial generating_series(const GeodesicCensus& census);

// Number of reduced expressions of e with letter multiset `label`, by
// right-descent recursion memoized on (element, remaining label).
Count geodesic_count(const CoxeterDiagram& d, const GroupElement& e,
                     const LabelVector& label,
                     std::uint64_t state_cap = 10'000'000);

// Same value via a label-bounded level-synchronous sweep; the fallback path
// when the recursion hits its state cap.
Count geodesic_count_by_sweep(const CoxeterDiagram& d, const GroupElement& e,
                              const LabelVector& label,
                              std::uint64_t max_pairs = 50'000'000);

bool is_ulg(const CoxeterDiagram& d, const Word& w,
            std::uint64_t state_cap = 10'000'000);

// All reduced expressions of e, optionally restricted to a label, in
// lexicographic order by generator index.
std::vector<Word> reduced_words(const CoxeterDiagram& d, const GroupElement& e,
                                const std::optional<LabelVector>& label_filter =
                                    std::nullopt,
                                std::uint64_t cap = 1'000'000);

// Elements with a unique reduced expression, identity included.
// Requires a complete census.
std::uint64_t unique_geodesic_elements(const GeodesicCensus& census);

}  // namespace ulg

#endif
