#ifndef ULGCOX_DIAGRAM_HPP
#define ULGCOX_DIAGRAM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ulg {

// Pairwise generator exponent. Only 2, 3 and infinity occur; this keeps the
// geometric representation over the integers.
enum class Exponent : std::uint8_t { two = 2, three = 3, infinity = 0 };

// A Coxeter diagram: named generators plus a symmetric exponent map on
// unordered pairs. Immutable after construction; vertex order is the
// coordinate order of label vectors and matrices everywhere downstream.
class CoxeterDiagram {
 public:
  CoxeterDiagram(std::vector<std::string> names,
                 const std::vector<std::pair<std::string, std::string>>& braid_edges,
                 const std::vector<std::pair<std::string, std::string>>& infinite_edges,
                 std::string display_name = "");

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name_of(std::size_t i) const { return names_[i]; }
  const std::string& display_name() const { return display_name_; }

  // Index of a generator name; InvalidArgument if unknown.
  std::size_t index_of(const std::string& name) const;
  std::optional<std::size_t> find(const std::string& name) const;

  Exponent exponent(std::size_t i, std::size_t j) const;

  // Cartan-style integer a_{ij}: 2 on the diagonal, 0 / -1 / -2 for
  // exponent 2 / 3 / infinity.
  int cartan(std::size_t i, std::size_t j) const;

  // Neighbours in the exponent-3 graph (the simply-laced view).
  const std::vector<std::size_t>& braid_neighbours(std::size_t i) const {
    return braid_adj_[i];
  }
  std::size_t braid_degree(std::size_t i) const { return braid_adj_[i].size(); }

  bool has_infinite_edge() const { return has_infinite_edge_; }

  // True iff the exponent-3 graph is connected and acyclic on all vertices.
  bool braid_graph_is_tree() const;

  // All generator names are single characters, so words can be written as
  // compact strings like a1ab3ba2ab4b.
  bool single_char_names() const;

  // Diagram file format round-trip (see parse_diagram).
  std::string serialize() const;

  bool structurally_equal(const CoxeterDiagram& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<Exponent> exp_;  // row-major n*n, diagonal unused
  std::vector<std::vector<std::size_t>> braid_adj_;
  bool has_infinite_edge_ = false;
  std::string display_name_;
};

// Chain diagram 1 - 2 - ... - n (type A_n). n = 0 is rejected.
CoxeterDiagram build_chain(std::size_t n);

CoxeterDiagram build_from_edges(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& braid_edges,
    const std::vector<std::pair<std::string, std::string>>& infinite_edges = {},
    std::string display_name = "");

// Built-in diagrams: "A<n>", "Atilde2", "Dstar4", "Dtilde6-paper".
CoxeterDiagram builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

// Diagram file format (UTF-8 text):
//   vertices: <tok> <tok> ...
//   edges: <tok>-<tok> ...        exponent-3 pairs; may be empty
//   infinite: <tok>-<tok> ...     optional
// '#' starts a comment, blank lines are ignored.
CoxeterDiagram parse_diagram(const std::string& text,
                             std::string display_name = "");
CoxeterDiagram load_diagram_file(const std::string& path);

}  // namespace ulg

#endif
