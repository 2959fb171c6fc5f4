#ifndef ULGCOX_TREEPATH_HPP
#define ULGCOX_TREEPATH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ulg/diagram.hpp"
#include "ulg/word.hpp"

namespace ulg {

// A turning of the path: some contiguous factor g h g of the word. The
// turning is short when the return vertex g has degree >= 3 in the
// exponent-3 tree.
struct Turning {
  std::size_t position;      // index of the middle letter
  std::uint32_t vertex;      // the vertex turned at
  std::uint32_t via;         // the repeated neighbour
  bool short_turning;
};

struct TurningProfile {
  Word word;
  std::vector<Turning> turnings;
  std::optional<std::uint32_t> start_vertex;
  std::optional<std::uint32_t> end_vertex;
  std::size_t branching_index = 0;  // number of short turnings
};

// True iff every pair of consecutive letters is an edge of the tree.
// Throws InvalidArgument unless the diagram is a simply laced tree.
bool path_legal(const CoxeterDiagram& d, const Word& w);

TurningProfile turning_profile(const CoxeterDiagram& d, const Word& w);

struct PatternFinding {
  std::size_t begin;  // inclusive word positions
  std::size_t end;
  std::uint32_t alpha;
  std::uint32_t beta;
  enum class Kind { head_tail, tail_head, chain } kind;
};

// Occurrences of the two refuting templates
//   a b . v . b a b   and   b a b . v . b a
// with v free of neighbours of a, plus the four chain-specific V-shaped
// patterns when the diagram is a chain. A nonempty result certifies the word
// is not a u.l.g.; an empty one proves nothing.
std::vector<PatternFinding> forbidden_pattern_scan(const CoxeterDiagram& d,
                                                   const Word& w);

struct LengthBound {
  std::int64_t value;                 // usable upper bound for the given B
  std::int64_t zero_branching_raw;    // raw quadratic value when B = 0
  bool small_rank_degenerate;         // n <= 3 with B = 0: formula unreliable
};

// Upper bound on the length of a u.l.g. with branching index B on a tree
// with n vertices: (n^2 + 5n)/2 - 7 for B = 0, n^2(B+1) + nB otherwise.
LengthBound length_bound(const CoxeterDiagram& d, std::size_t branching);

struct StructureCheck {
  bool applicable = false;  // false when the word is not reduced
  bool consecutive_turnings_ok = true;
  bool window_single_visit_ok = true;
  bool branch_visit_turnings_ok = true;
  bool branch_distance_ok = true;
  bool long_turning_neighbours_ok = true;
  std::vector<std::string> violations;

  bool all_pass() const {
    return applicable && consecutive_turnings_ok && window_single_visit_ok &&
           branch_visit_turnings_ok && branch_distance_ok &&
           long_turning_neighbours_ok;
  }
};

// Necessary conditions for a reduced path word to be a u.l.g. Any failed
// clause certifies the word is not one; passing proves nothing, and the
// report never claims otherwise.
StructureCheck ulg_structure_check(const CoxeterDiagram& d, const Word& w);

// TSV rows {word, reduced, legal, turning_list, B, violations}.
std::string format_tree_report(const CoxeterDiagram& d,
                               const std::vector<Word>& words);

std::uint64_t tree_distance(const CoxeterDiagram& d, std::uint32_t u,
                            std::uint32_t v);

}  // namespace ulg

#endif
