#ifndef ULGCOX_WORD_HPP
#define ULGCOX_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ulg/diagram.hpp"

namespace ulg {

// A word is a sequence of generator indices into the diagram's name list.
// It need not be reduced.
using Word = std::vector<std::uint32_t>;

// Letter multiplicities per generator; coordinate k counts generator k.
using LabelVector = std::vector<std::uint32_t>;

LabelVector label_of(const CoxeterDiagram& d, const Word& w);
std::uint64_t degree(const LabelVector& label);

// Word text: whitespace-separated tokens, or one compact string when every
// generator name is a single character (the a1ab3ba2ab4b style).
Word parse_word(const CoxeterDiagram& d, const std::string& text);
std::string format_word(const CoxeterDiagram& d, const Word& w);

// Label text: comma-separated counts in vertex order, e.g. "1,2,1".
LabelVector parse_label(const CoxeterDiagram& d, const std::string& text);
std::string format_label(const LabelVector& label);

Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::size_t n);
Word reversed(const Word& w);

}  // namespace ulg

#endif
