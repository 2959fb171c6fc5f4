#ifndef ULGCOX_DTILDE6_HPP
#define ULGCOX_DTILDE6_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ulg/diagram.hpp"
#include "ulg/word.hpp"

namespace ulg::dtilde6 {

// The six-vertex tree {1,2,a,b,3,4} with two adjacent branching vertices.
const CoxeterDiagram& diagram();

// The three periodic u.l.g. words over that tree. w2 is w under the leaf
// swap 3<->4, w3 is w under 1<->2.
struct WordFamily {
  Word w;   // a1ab3ba2ab4b
  Word w2;  // a1ab4ba2ab3b
  Word w3;  // a2ab3ba1ab4b
};
WordFamily ulg_word_family();

enum class Variant { w, w2, w3, base, cox_ij };
Variant parse_variant(const std::string& token);

// base = a1a2ab3b4b (powers collapse); cox_ij = a34b12, the product of the
// two commuting generator sets {a,3,4} and {b,1,2} (powers stay reduced).
Word variant_word(Variant variant);

std::uint64_t power_length(Variant variant, std::size_t n);

// Whether variant^n is a uniquely labelled geodesic. Falls back to the
// label-bounded sweep when the counting recursion hits its state cap.
bool power_is_ulg(Variant variant, std::size_t n,
                  std::uint64_t state_cap = 10'000'000);

// Checks that w^n equals 1a3 (1b23a4)^{2n-1} 2b4 with reduced middle factor
// and length at least 12n - 12.
struct NormalFormCheck {
  bool element_equal = false;
  bool middle_reduced = false;
  bool length_ok = false;
  std::uint64_t length = 0;
  bool holds() const { return element_equal && middle_reduced && length_ok; }
};
NormalFormCheck normal_form_identity(std::size_t n);

enum class Mechanism {
  proof_handled,
  xyxy_not_reduced,
  xyx_dots_xyx_not_reduced,
  xy_dots_yxy_not_ulg,
};
Mechanism parse_mechanism(const std::string& token);
std::string to_string(Mechanism mechanism);

struct CaseRecord {
  int id = 0;
  Word word;
  std::string word_text;
  Mechanism mechanism = Mechanism::proof_handled;
};

// Corpus file: one case per line, <id>TAB<word>TAB<mechanism>. Location:
// $ULG_CORPUS_DIR, then the built-in data directory.
std::vector<CaseRecord> load_case_corpus();
std::string corpus_directory();

struct CaseResult {
  int id = 0;
  std::string claim;
  std::string observed;
  enum class Status { pass, fail, prose_only } status = Status::fail;
};

std::vector<CaseResult> run_case_corpus(std::uint64_t state_cap = 10'000'000);
std::string format_case_report(const std::vector<CaseResult>& results);

struct FellowTravelProfile {
  std::size_t prefix_length = 0;
  std::size_t interior_begin = 0;     // first analysed vertex index on line B
  std::vector<std::uint64_t> min_distances;  // per interior vertex of line B
  std::uint64_t min_distance = 0;
  std::uint64_t max_distance = 0;
  std::uint64_t raw_unanchored_min = 0;  // same scan with an empty anchor
};

// Distance profile between the line of `line_a` powers from the identity and
// the line of `line_b` powers starting at `anchor`. For each interior vertex
// of line B (skipping |anchor| vertices at both ends), the minimum distance
// to line A over a window of width >= 24 centred at the matching index.
FellowTravelProfile fellow_travel_profile(const Word& line_a, const Word& line_b,
                                          const Word& anchor,
                                          std::size_t prefix_length = 60);

// Anchors for the w2 and w3 lines, from the factorisations of w^2.
Word w2_anchor();  // 1a23b3
Word w3_anchor();  // 1a3b41

// Apply a two-generator name swap to every letter of a word.
Word apply_letter_swap(const CoxeterDiagram& d, const Word& w,
                       const std::string& x, const std::string& y);

}  // namespace ulg::dtilde6

#endif
