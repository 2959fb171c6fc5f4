#ifndef ULGCOX_POLYNOMIAL_IO_HPP
#define ULGCOX_POLYNOMIAL_IO_HPP

#include <string>

#include "ulg/census.hpp"

namespace ulg {

// Polynomial text format: header lines `# diagram:`, `# radius:`,
// `# complete:`, then one monomial per line `<i1>,<i2>,...<TAB><coefficient>`
// sorted lexicographically by label. Formatting is stable and re-parses to
// the same polynomial.
std::string format_polynomial(const LabelPolynomial& p);
LabelPolynomial parse_polynomial(const std::string& text);

}  // namespace ulg

#endif
