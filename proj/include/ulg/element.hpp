#ifndef ULGCOX_ELEMENT_HPP
#define ULGCOX_ELEMENT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ulg/diagram.hpp"
#include "ulg/word.hpp"

namespace ulg {

// A group element as its exact integer matrix in the geometric
// representation: column j holds the image of simple root alpha_j in the
// simple-root basis. Entries use checked 64-bit arithmetic; overflow throws,
// never wraps. Immutable value type.
class GroupElement {
 public:
  explicit GroupElement(std::size_t rank);  // identity

  std::size_t rank() const { return n_; }
  std::int64_t entry(std::size_t row, std::size_t col) const {
    return m_[row * n_ + col];
  }
  // Row-major entries; also the canonical hashable key.
  const std::vector<std::int64_t>& key() const { return m_; }

  bool operator==(const GroupElement& other) const { return m_ == other.m_; }
  bool operator!=(const GroupElement& other) const { return m_ != other.m_; }
  bool is_identity() const;

 private:
  friend GroupElement right_multiply(const CoxeterDiagram&, const GroupElement&,
                                     std::size_t);
  friend GroupElement multiply(const CoxeterDiagram&, const GroupElement&,
                               const GroupElement&);
  std::size_t n_;
  std::vector<std::int64_t> m_;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& e) const;
  std::size_t operator()(const std::vector<std::int64_t>& key) const;
};

GroupElement identity(const CoxeterDiagram& d);

// e * s_g. Involution: applying the same g twice gives e back.
GroupElement right_multiply(const CoxeterDiagram& d, const GroupElement& e,
                            std::size_t g);

// True iff l(e * s_g) = l(e) - 1, i.e. e sends alpha_g to a negative root.
bool is_right_descent(const CoxeterDiagram& d, const GroupElement& e,
                      std::size_t g);

// Coxeter length, by stripping right descents until the identity.
std::uint64_t length(const CoxeterDiagram& d, const GroupElement& e);

GroupElement evaluate(const CoxeterDiagram& d, const Word& w);

bool is_reduced(const CoxeterDiagram& d, const Word& w);

GroupElement inverse(const CoxeterDiagram& d, const GroupElement& e);

// Group product a * b (checked matrix product).
GroupElement multiply(const CoxeterDiagram& d, const GroupElement& a,
                      const GroupElement& b);

// A reduced word for e, choosing the smallest right descent at each step.
// Deterministic; the empty word for the identity.
Word canonical_word(const CoxeterDiagram& d, const GroupElement& e);

// d(u, v) = l(u^-1 v), the Cayley-graph distance.
std::uint64_t distance(const CoxeterDiagram& d, const GroupElement& u,
                       const GroupElement& v);

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace ulg

#endif
