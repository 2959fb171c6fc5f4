#include "ulg/treepath.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "ulg/element.hpp"
#include "ulg/errors.hpp"

namespace ulg {

namespace {

void require_tree(const CoxeterDiagram& d) {
  if (d.has_infinite_edge())
    throw InvalidArgument("tree-path analysis requires a simply laced diagram");
  if (!d.braid_graph_is_tree())
    throw InvalidArgument("tree-path analysis requires a tree diagram");
}

bool adjacent(const CoxeterDiagram& d, std::uint32_t u, std::uint32_t v) {
  return u != v && d.exponent(u, v) == Exponent::three;
}

}  // namespace

std::uint64_t tree_distance(const CoxeterDiagram& d, std::uint32_t u,
                            std::uint32_t v) {
  if (u == v) return 0;
  std::vector<std::int64_t> dist(d.rank(), -1);
  std::deque<std::uint32_t> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    if (x == v) return static_cast<std::uint64_t>(dist[x]);
    for (std::size_t y : d.braid_neighbours(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(static_cast<std::uint32_t>(y));
      }
  }
  throw InvalidArgument("vertices lie in different components");
}

bool path_legal(const CoxeterDiagram& d, const Word& w) {
  require_tree(d);
  for (std::uint32_t g : w)
    if (g >= d.rank()) throw InvalidArgument("generator index out of range");
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!adjacent(d, w[i - 1], w[i])) return false;
  return true;
}

TurningProfile turning_profile(const CoxeterDiagram& d, const Word& w) {
  if (!path_legal(d, w))
    throw InvalidArgument("word is not a path on the tree");
  TurningProfile profile;
  profile.word = w;
  if (!w.empty()) {
    profile.start_vertex = w.front();
    profile.end_vertex = w.back();
  }
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i - 1] != w[i + 1]) continue;
    Turning t;
    t.position = i;
    t.vertex = w[i];
    t.via = w[i - 1];
    t.short_turning = d.braid_degree(t.via) >= 3;
    if (t.short_turning) ++profile.branching_index;
    profile.turnings.push_back(t);
  }
  return profile;
}

namespace {

bool window_avoids_neighbours(const CoxeterDiagram& d, const Word& w,
                              std::size_t begin, std::size_t end,
                              std::uint32_t alpha) {
  for (std::size_t k = begin; k < end; ++k)
    if (adjacent(d, w[k], alpha)) return false;
  return true;
}

void scan_chain_patterns(const CoxeterDiagram& d, const Word& w,
                         std::vector<PatternFinding>& findings) {
  const std::size_t n = d.rank();
  // The four V-shaped refuting patterns on a chain, for every l + 2 <= m.
  auto add_matches = [&](const Word& pattern, std::uint32_t l, std::uint32_t m) {
    auto it = w.begin();
    while ((it = std::search(it, w.end(), pattern.begin(), pattern.end())) !=
           w.end()) {
      PatternFinding f;
      f.begin = static_cast<std::size_t>(it - w.begin());
      f.end = f.begin + pattern.size() - 1;
      f.alpha = l;
      f.beta = m;
      f.kind = PatternFinding::Kind::chain;
      findings.push_back(f);
      ++it;
    }
  };
  for (std::uint32_t l = 0; l < n; ++l)
    for (std::uint32_t m = l + 2; m < n; ++m) {
      Word down_up;  // m, m-1, ..., l, ..., m-1, m
      for (std::uint32_t k = m + 1; k-- > l;) down_up.push_back(k);
      for (std::uint32_t k = l + 1; k <= m; ++k) down_up.push_back(k);
      Word up_down;  // l, l+1, ..., m, ..., l+1, l
      for (std::uint32_t k = l; k <= m; ++k) up_down.push_back(k);
      for (std::uint32_t k = m; k-- > l;) up_down.push_back(k);

      Word p1 = down_up;  // ... m-1 appended
      p1.push_back(m - 1);
      Word p2;  // m-1, m, then descend to l, ascend to m
      p2.push_back(m - 1);
      p2.insert(p2.end(), down_up.begin(), down_up.end());
      Word p3 = up_down;
      p3.push_back(l + 1);
      Word p4;
      p4.push_back(l + 1);
      p4.insert(p4.end(), up_down.begin(), up_down.end());
      add_matches(p1, l, m);
      add_matches(p2, l, m);
      add_matches(p3, l, m);
      add_matches(p4, l, m);
    }
}

bool diagram_is_chain(const CoxeterDiagram& d) {
  const std::size_t n = d.rank();
  if (d.has_infinite_edge()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool edge = d.exponent(i, j) == Exponent::three;
      if (edge != (j == i + 1)) return false;
    }
  return true;
}

}  // namespace

std::vector<PatternFinding> forbidden_pattern_scan(const CoxeterDiagram& d,
                                                   const Word& w) {
  if (!path_legal(d, w))
    throw InvalidArgument("word is not a path on the tree");
  std::vector<PatternFinding> findings;
  const std::size_t len = w.size();
  // template 1: a b [v] b a b,  template 2: b a b [v] b a
  for (std::size_t i = 0; i + 1 < len; ++i) {
    const std::uint32_t alpha = w[i], beta = w[i + 1];
    if (!adjacent(d, alpha, beta)) continue;
    for (std::size_t j = i + 2; j + 2 < len; ++j) {
      if (w[j] == beta && w[j + 1] == alpha && w[j + 2] == beta &&
          window_avoids_neighbours(d, w, i + 2, j, alpha)) {
        findings.push_back({i, j + 2, alpha, beta, PatternFinding::Kind::head_tail});
      }
    }
  }
  for (std::size_t i = 0; i + 2 < len; ++i) {
    const std::uint32_t beta = w[i], alpha = w[i + 1];
    if (w[i + 2] != beta || !adjacent(d, alpha, beta)) continue;
    for (std::size_t j = i + 3; j + 1 < len; ++j) {
      if (w[j] == beta && w[j + 1] == alpha &&
          window_avoids_neighbours(d, w, i + 3, j, alpha)) {
        findings.push_back({i, j + 1, alpha, beta, PatternFinding::Kind::tail_head});
      }
    }
  }
  if (diagram_is_chain(d)) scan_chain_patterns(d, w, findings);
  return findings;
}

LengthBound length_bound(const CoxeterDiagram& d, std::size_t branching) {
  require_tree(d);
  const std::int64_t n = static_cast<std::int64_t>(d.rank());
  LengthBound bound{};
  bound.zero_branching_raw = (n * (n + 5)) / 2 - 7;
  bound.small_rank_degenerate = branching == 0 && n <= 3;
  if (branching == 0) {
    bound.value = bound.zero_branching_raw;
  } else {
    const std::int64_t b = static_cast<std::int64_t>(branching);
    bound.value = n * n * (b + 1) + n * b;
  }
  return bound;
}

namespace {

struct BranchDecomposition {
  // branch id per vertex; branching vertices get npos
  std::vector<std::size_t> branch_of;
  std::vector<bool> is_branching;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

BranchDecomposition decompose_branches(const CoxeterDiagram& d) {
  const std::size_t n = d.rank();
  BranchDecomposition dec;
  dec.is_branching.resize(n);
  dec.branch_of.assign(n, BranchDecomposition::npos);
  for (std::size_t v = 0; v < n; ++v) dec.is_branching[v] = d.braid_degree(v) >= 3;
  std::size_t next_id = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (dec.is_branching[v] || dec.branch_of[v] != BranchDecomposition::npos)
      continue;
    std::vector<std::size_t> stack{v};
    dec.branch_of[v] = next_id;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : d.braid_neighbours(x))
        if (!dec.is_branching[y] &&
            dec.branch_of[y] == BranchDecomposition::npos) {
          dec.branch_of[y] = next_id;
          stack.push_back(y);
        }
    }
    ++next_id;
  }
  return dec;
}

struct BranchVisit {
  std::size_t begin, end;  // word positions, inclusive, inside the branch
  std::size_t branch;
  std::optional<std::uint32_t> left_gamma, right_gamma;
};

std::vector<BranchVisit> branch_visits(const Word& w,
                                       const BranchDecomposition& dec) {
  std::vector<BranchVisit> visits;
  std::size_t i = 0;
  while (i < w.size()) {
    if (dec.is_branching[w[i]]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < w.size() && !dec.is_branching[w[j + 1]]) ++j;
    BranchVisit visit;
    visit.begin = i;
    visit.end = j;
    visit.branch = dec.branch_of[w[i]];
    if (i > 0) visit.left_gamma = w[i - 1];
    if (j + 1 < w.size()) visit.right_gamma = w[j + 1];
    visits.push_back(visit);
    i = j + 1;
  }
  return visits;
}

}  // namespace

StructureCheck ulg_structure_check(const CoxeterDiagram& d, const Word& w) {
  if (!path_legal(d, w))
    throw InvalidArgument("word is not a path on the tree");
  StructureCheck check;
  if (!is_reduced(d, w)) {
    check.applicable = false;
    check.violations.push_back("word is not reduced; checks not applicable");
    return check;
  }
  check.applicable = true;
  if (w.size() <= 1) return check;

  const TurningProfile profile = turning_profile(d, w);
  const std::size_t r = profile.turnings.size();

  // positions/vertices of nu_0 .. nu_{r+1}
  std::vector<std::size_t> pos(r + 2);
  std::vector<std::uint32_t> vertex(r + 2);
  pos[0] = 0;
  vertex[0] = w.front();
  for (std::size_t i = 0; i < r; ++i) {
    pos[i + 1] = profile.turnings[i].position;
    vertex[i + 1] = profile.turnings[i].vertex;
  }
  pos[r + 1] = w.size() - 1;
  vertex[r + 1] = w.back();

  auto occurrences = [&](std::uint32_t v, std::size_t begin, std::size_t end) {
    std::size_t count = 0;
    for (std::size_t k = begin; k <= end; ++k)
      if (w[k] == v) ++count;
    return count;
  };

  // (a) consecutive listed vertices distinct; each subpath passes its two
  // endpoints exactly once
  for (std::size_t i = 0; i + 1 <= r + 1; ++i) {
    const std::size_t b = pos[i], e = pos[i + 1];
    if (vertex[i] == vertex[i + 1]) {
      check.consecutive_turnings_ok = false;
      check.violations.push_back("equal consecutive turning vertices at word position " +
                                 std::to_string(e));
      continue;
    }
    if (occurrences(vertex[i], b, e) != 1 || occurrences(vertex[i + 1], b, e) != 1) {
      check.consecutive_turnings_ok = false;
      check.violations.push_back("subpath [" + std::to_string(b) + "," +
                                 std::to_string(e) + "] revisits an endpoint");
    }
  }

  // (b) windowed single visit around each turning
  for (std::size_t i = 1; i <= r; ++i) {
    const std::size_t lo = pos[i >= 2 ? i - 2 : 0];
    const std::size_t hi = pos[std::min(i + 2, r + 1)];
    if (occurrences(vertex[i], lo, hi) != 1) {
      check.window_single_visit_ok = false;
      check.violations.push_back("turning vertex " + d.name_of(vertex[i]) +
                                 " revisited inside its window");
    }
  }

  const BranchDecomposition dec = decompose_branches(d);
  const std::vector<BranchVisit> visits = branch_visits(w, dec);

  // (c) a complete visit of a branch has exactly one turning inside it
  for (const auto& visit : visits) {
    if (!visit.left_gamma || !visit.right_gamma ||
        *visit.left_gamma != *visit.right_gamma)
      continue;
    std::size_t inside = 0;
    for (const auto& t : profile.turnings)
      if (t.position >= visit.begin && t.position <= visit.end) ++inside;
    if (inside != 1) {
      check.branch_visit_turnings_ok = false;
      check.violations.push_back("branch visit [" + std::to_string(visit.begin) +
                                 "," + std::to_string(visit.end) + "] has " +
                                 std::to_string(inside) + " turnings");
    }
  }

  // same-branch turning lists through a fixed branching vertex, in path order
  std::map<std::pair<std::size_t, std::uint32_t>, std::vector<std::uint64_t>>
      branch_lists;
  for (const auto& visit : visits) {
    if (!visit.left_gamma || !visit.right_gamma ||
        *visit.left_gamma != *visit.right_gamma)
      continue;
    for (const auto& t : profile.turnings)
      if (t.position >= visit.begin && t.position <= visit.end)
        branch_lists[{visit.branch, *visit.left_gamma}].push_back(
            tree_distance(d, t.vertex, *visit.left_gamma));
  }

  for (const auto& [key, distances] : branch_lists) {
    (void)key;
    const std::size_t s = distances.size();
    // (d) any pair must enclose a turning at distance max(1, min - 1)
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) {
        const std::uint64_t need =
            std::max<std::uint64_t>(1, std::min(distances[i], distances[j]) - 1);
        bool found = false;
        for (std::size_t k = i; k <= j && !found; ++k)
          if (distances[k] == need) found = true;
        if (!found) {
          check.branch_distance_ok = false;
          check.violations.push_back("branch turnings at distances " +
                                     std::to_string(distances[i]) + "," +
                                     std::to_string(distances[j]) +
                                     " lack an intermediate turning");
        }
      }
    // (e) a long turning needs a short neighbour in its branch list
    for (std::size_t i = 0; i < s; ++i) {
      if (distances[i] < 2 || s < 2) continue;
      const bool ok = (i > 0 && distances[i - 1] == 1) ||
                      (i + 1 < s && distances[i + 1] == 1);
      if (!ok) {
        check.long_turning_neighbours_ok = false;
        check.violations.push_back("long turning without a short neighbour");
      }
    }
  }
  return check;
}

std::string format_tree_report(const CoxeterDiagram& d,
                               const std::vector<Word>& words) {
  std::ostringstream out;
  out << "word\treduced\tlegal\tturning_list\tB\tviolations\n";
  for (const Word& w : words) {
    const bool legal = path_legal(d, w);
    out << format_word(d, w) << '\t' << (is_reduced(d, w) ? "true" : "false")
        << '\t' << (legal ? "true" : "false") << '\t';
    if (legal) {
      const TurningProfile profile = turning_profile(d, w);
      for (std::size_t i = 0; i < profile.turnings.size(); ++i) {
        if (i) out << ' ';
        out << d.name_of(profile.turnings[i].vertex)
            << (profile.turnings[i].short_turning ? "(s)" : "(l)");
      }
      out << '\t' << profile.branching_index << '\t';
      const StructureCheck check = ulg_structure_check(d, w);
      const auto findings = forbidden_pattern_scan(d, w);
      if (!check.applicable) {
        out << "not-reduced";
      } else if (check.all_pass() && findings.empty()) {
        out << "none";
      } else {
        bool first = true;
        for (const auto& v : check.violations) {
          out << (first ? "" : "; ") << v;
          first = false;
        }
        if (!findings.empty())
          out << (first ? "" : "; ") << findings.size() << " forbidden pattern(s)";
      }
    } else {
      out << "-\t-\tillegal-path";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ulg
