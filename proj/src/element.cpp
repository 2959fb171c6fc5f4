#include "ulg/element.hpp"

#include <algorithm>
#include <sstream>

#include "ulg/errors.hpp"

namespace ulg {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("matrix entry overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("matrix entry overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("matrix entry overflow in multiplication");
  return r;
}

}  // namespace detail

GroupElement::GroupElement(std::size_t rank) : n_(rank), m_(rank * rank, 0) {
  for (std::size_t i = 0; i < rank; ++i) m_[i * rank + i] = 1;
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (m_[i * n_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t ElementHash::operator()(const std::vector<std::int64_t>& key) const {
  std::size_t h = 1469598103934665603ull;
  for (std::int64_t v : key) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t ElementHash::operator()(const GroupElement& e) const {
  return (*this)(e.key());
}

GroupElement identity(const CoxeterDiagram& d) { return GroupElement(d.rank()); }

GroupElement right_multiply(const CoxeterDiagram& d, const GroupElement& e,
                            std::size_t g) {
  const std::size_t n = e.rank();
  if (g >= n) throw InvalidArgument("generator index out of range");
  // (e * s_g) has column_j = column_j - a_{gj} * column_g; column_g flips sign.
  GroupElement r = e;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == g) continue;
    const int a = d.cartan(g, j);
    if (a == 0) continue;
    for (std::size_t row = 0; row < n; ++row) {
      std::int64_t& cell = r.m_[row * n + j];
      cell = detail::checked_sub(
          cell, detail::checked_mul(a, e.m_[row * n + g]));
    }
  }
  for (std::size_t row = 0; row < n; ++row) {
    std::int64_t& cell = r.m_[row * n + g];
    cell = -cell;
  }
  return r;
}

bool is_right_descent(const CoxeterDiagram& d, const GroupElement& e,
                      std::size_t g) {
  const std::size_t n = e.rank();
  if (g >= n) throw InvalidArgument("generator index out of range");
  (void)d;
  // e(alpha_g) is a root: nonpositive iff s_g shortens e.
  for (std::size_t row = 0; row < n; ++row)
    if (e.entry(row, g) > 0) return false;
  return true;
}

std::uint64_t length(const CoxeterDiagram& d, const GroupElement& e) {
  GroupElement cur = e;
  std::uint64_t len = 0;
  const std::size_t n = e.rank();
  for (;;) {
    std::size_t g = n;
    for (std::size_t i = 0; i < n; ++i)
      if (is_right_descent(d, cur, i)) {
        g = i;
        break;
      }
    if (g == n) return len;  // no descent: the identity
    cur = right_multiply(d, cur, g);
    ++len;
  }
}

GroupElement evaluate(const CoxeterDiagram& d, const Word& w) {
  GroupElement e = identity(d);
  for (std::uint32_t g : w) e = right_multiply(d, e, g);
  return e;
}

bool is_reduced(const CoxeterDiagram& d, const Word& w) {
  GroupElement prefix = identity(d);
  for (std::uint32_t g : w) {
    if (is_right_descent(d, prefix, g)) return false;
    prefix = right_multiply(d, prefix, g);
  }
  return true;
}

Word canonical_word(const CoxeterDiagram& d, const GroupElement& e) {
  GroupElement cur = e;
  const std::size_t n = e.rank();
  Word rev;
  for (;;) {
    std::size_t g = n;
    for (std::size_t i = 0; i < n; ++i)
      if (is_right_descent(d, cur, i)) {
        g = i;
        break;
      }
    if (g == n) break;
    rev.push_back(static_cast<std::uint32_t>(g));
    cur = right_multiply(d, cur, g);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

GroupElement inverse(const CoxeterDiagram& d, const GroupElement& e) {
  Word w = canonical_word(d, e);
  std::reverse(w.begin(), w.end());
  return evaluate(d, w);
}

GroupElement multiply(const CoxeterDiagram& d, const GroupElement& a,
                      const GroupElement& b) {
  (void)d;
  const std::size_t n = a.rank();
  if (b.rank() != n) throw InvalidArgument("rank mismatch in multiply");
  GroupElement r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < n; ++k)
        sum = detail::checked_add(
            sum, detail::checked_mul(a.m_[i * n + k], b.m_[k * n + j]));
      r.m_[i * n + j] = sum;
    }
  return r;
}

std::uint64_t distance(const CoxeterDiagram& d, const GroupElement& u,
                       const GroupElement& v) {
  return length(d, multiply(d, inverse(d, u), v));
}

LabelVector label_of(const CoxeterDiagram& d, const Word& w) {
  LabelVector label(d.rank(), 0);
  for (std::uint32_t g : w) {
    if (g >= d.rank()) throw InvalidArgument("generator index out of range");
    ++label[g];
  }
  return label;
}

std::uint64_t degree(const LabelVector& label) {
  std::uint64_t sum = 0;
  for (auto c : label) sum += c;
  return sum;
}

Word parse_word(const CoxeterDiagram& d, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  Word w;
  bool all_known = !tokens.empty();
  for (const auto& t : tokens)
    if (!d.find(t)) {
      all_known = false;
      break;
    }
  if (all_known) {
    for (const auto& t : tokens) w.push_back(static_cast<std::uint32_t>(d.index_of(t)));
    return w;
  }
  if (!d.single_char_names())
    throw InvalidArgument(
        "word contains unknown tokens and generator names are not all "
        "single characters: '" + text + "'");
  for (const auto& t : tokens)
    for (char c : t)
      w.push_back(static_cast<std::uint32_t>(d.index_of(std::string(1, c))));
  return w;
}

std::string format_word(const CoxeterDiagram& d, const Word& w) {
  std::string out;
  const bool compact = d.single_char_names();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) out += ' ';
    out += d.name_of(w[i]);
  }
  return out;
}

LabelVector parse_label(const CoxeterDiagram& d, const std::string& text) {
  LabelVector label;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ','))
    label.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  if (label.size() != d.rank())
    throw InvalidArgument("label has " + std::to_string(label.size()) +
                          " coordinates, diagram has rank " +
                          std::to_string(d.rank()));
  return label;
}

std::string format_label(const LabelVector& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(label[i]);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word power(const Word& w, std::size_t n) {
  Word r;
  r.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

Word reversed(const Word& w) {
  Word r(w.rbegin(), w.rend());
  return r;
}

}  // namespace ulg
