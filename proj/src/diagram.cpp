#include "ulg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ulg/errors.hpp"

namespace ulg {

namespace {

void validate_name(const std::string& name) {
  if (name.empty()) throw InvalidArgument("empty generator name");
  for (unsigned char c : name) {
    if (std::isspace(c) || !std::isprint(c))
      throw InvalidArgument("generator name not printable: '" + name + "'");
  }
  if (name.find('-') != std::string::npos || name.find('#') != std::string::npos)
    throw InvalidArgument("generator name may not contain '-' or '#': '" + name + "'");
}

}  // namespace

CoxeterDiagram::CoxeterDiagram(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& braid_edges,
    const std::vector<std::pair<std::string, std::string>>& infinite_edges,
    std::string display_name)
    : names_(std::move(names)), display_name_(std::move(display_name)) {
  if (names_.empty()) throw InvalidArgument("diagram needs at least one generator");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    validate_name(names_[i]);
    if (!index.emplace(names_[i], i).second)
      throw InvalidArgument("duplicate generator name: '" + names_[i] + "'");
  }
  const std::size_t n = names_.size();
  exp_.assign(n * n, Exponent::two);
  braid_adj_.assign(n, {});

  auto resolve = [&](const std::string& tok) -> std::size_t {
    auto it = index.find(tok);
    if (it == index.end())
      throw InvalidArgument("unknown generator name: '" + tok + "'");
    return it->second;
  };

  auto set_edge = [&](const std::pair<std::string, std::string>& e, Exponent x) {
    std::size_t i = resolve(e.first), j = resolve(e.second);
    if (i == j) throw InvalidArgument("self-loop on generator: '" + e.first + "'");
    Exponent& fwd = exp_[i * n + j];
    if (fwd != Exponent::two && fwd != x)
      throw InvalidArgument("pair listed as both braid and infinite: '" + e.first +
                            "-" + e.second + "'");
    fwd = x;
    exp_[j * n + i] = x;
  };
  for (const auto& e : braid_edges) set_edge(e, Exponent::three);
  for (const auto& e : infinite_edges) set_edge(e, Exponent::infinity);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (exp_[i * n + j] == Exponent::three && i != j) braid_adj_[i].push_back(j);
      if (exp_[i * n + j] == Exponent::infinity) has_infinite_edge_ = true;
    }
}

std::size_t CoxeterDiagram::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw InvalidArgument("unknown generator name: '" + name + "'");
  return *idx;
}

std::optional<std::size_t> CoxeterDiagram::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Exponent CoxeterDiagram::exponent(std::size_t i, std::size_t j) const {
  if (i == j) throw InvalidArgument("exponent(i,i) is implicitly 1");
  return exp_[i * rank() + j];
}

int CoxeterDiagram::cartan(std::size_t i, std::size_t j) const {
  if (i == j) return 2;
  switch (exp_[i * rank() + j]) {
    case Exponent::two: return 0;
    case Exponent::three: return -1;
    case Exponent::infinity: return -2;
  }
  return 0;
}

bool CoxeterDiagram::braid_graph_is_tree() const {
  const std::size_t n = rank();
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) edges += braid_adj_[i].size();
  edges /= 2;
  if (edges != n - 1) return false;
  // connected?
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t u : braid_adj_[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  return count == n;
}

bool CoxeterDiagram::single_char_names() const {
  return std::all_of(names_.begin(), names_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

std::string CoxeterDiagram::serialize() const {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& name : names_) out << ' ' << name;
  out << "\nedges:";
  const std::size_t n = rank();
  bool any_inf = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (exp_[i * n + j] == Exponent::three)
        out << ' ' << names_[i] << '-' << names_[j];
      if (exp_[i * n + j] == Exponent::infinity) any_inf = true;
    }
  out << '\n';
  if (any_inf) {
    out << "infinite:";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (exp_[i * n + j] == Exponent::infinity)
          out << ' ' << names_[i] << '-' << names_[j];
    out << '\n';
  }
  return out.str();
}

bool CoxeterDiagram::structurally_equal(const CoxeterDiagram& other) const {
  return names_ == other.names_ && exp_ == other.exp_;
}

CoxeterDiagram build_chain(std::size_t n) {
  if (n == 0) throw InvalidArgument("chain rank must be positive");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i)
    edges.emplace_back(std::to_string(i), std::to_string(i + 1));
  return CoxeterDiagram(std::move(names), edges, {}, "A" + std::to_string(n));
}

CoxeterDiagram build_from_edges(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& braid_edges,
    const std::vector<std::pair<std::string, std::string>>& infinite_edges,
    std::string display_name) {
  return CoxeterDiagram(std::move(names), braid_edges, infinite_edges,
                        std::move(display_name));
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"A<n>", "Atilde2", "Dstar4",
                                                 "Dtilde6-paper"};
  return names;
}

CoxeterDiagram builtin(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'A' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    std::size_t n = std::stoul(name.substr(1));
    if (n >= 1) return build_chain(n);
  }
  if (name == "Atilde2")
    return build_from_edges({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}},
                            {}, name);
  if (name == "Dstar4")
    return build_from_edges({"0", "1", "2", "3"},
                            {{"0", "1"}, {"0", "2"}, {"0", "3"}}, {}, name);
  if (name == "Dtilde6-paper")
    return build_from_edges(
        {"1", "2", "a", "b", "3", "4"},
        {{"1", "a"}, {"2", "a"}, {"a", "b"}, {"b", "3"}, {"b", "4"}}, {}, name);
  std::string available;
  for (const auto& t : builtin_names()) available += " " + t;
  throw InvalidArgument("unknown builtin diagram '" + name + "'; available:" +
                        available);
}

namespace {

std::vector<std::pair<std::string, std::string>> parse_pair_list(
    const std::string& body, std::size_t line_no) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
      throw ParseError(line_no, "expected <tok>-<tok>, got '" + tok + "'");
    pairs.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
  }
  return pairs;
}

}  // namespace

CoxeterDiagram parse_diagram(const std::string& text, std::string display_name) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_vertices = false, have_edges = false, have_infinite = false;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> braid, infinite;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(line_no, "expected '<keyword>: ...'");
    std::string keyword = line.substr(0, colon);
    keyword.erase(0, keyword.find_first_not_of(" \t"));
    keyword.erase(keyword.find_last_not_of(" \t") + 1);
    std::string body = line.substr(colon + 1);
    if (keyword == "vertices") {
      if (have_vertices) throw ParseError(line_no, "duplicate 'vertices' line");
      have_vertices = true;
      std::istringstream toks(body);
      std::string tok;
      while (toks >> tok) names.push_back(tok);
    } else if (keyword == "edges") {
      if (!have_vertices) throw ParseError(line_no, "'edges' before 'vertices'");
      if (have_edges) throw ParseError(line_no, "duplicate 'edges' line");
      have_edges = true;
      braid = parse_pair_list(body, line_no);
    } else if (keyword == "infinite") {
      if (!have_edges) throw ParseError(line_no, "'infinite' before 'edges'");
      if (have_infinite) throw ParseError(line_no, "duplicate 'infinite' line");
      have_infinite = true;
      infinite = parse_pair_list(body, line_no);
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_vertices) throw ParseError(line_no, "missing 'vertices' line");
  if (!have_edges) throw ParseError(line_no, "missing 'edges' line");
  return build_from_edges(std::move(names), braid, infinite,
                          std::move(display_name));
}

CoxeterDiagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open diagram file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str(), path);
}

}  // namespace ulg
