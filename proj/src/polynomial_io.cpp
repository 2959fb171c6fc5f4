#include "ulg/polynomial_io.hpp"

#include <sstream>

#include "ulg/errors.hpp"

namespace ulg {

std::string format_polynomial(const LabelPolynomial& p) {
  std::ostringstream out;
  out << "# diagram: " << p.diagram_name << '\n';
  out << "# radius: " << p.radius << '\n';
  out << "# complete: " << (p.complete ? "true" : "false") << '\n';
  for (const auto& [label, c] : p.coefficients)
    out << format_label(label) << '\t' << c << '\n';
  return out.str();
}

LabelPolynomial parse_polynomial(const std::string& text) {
  LabelPolynomial p;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line.substr(1));
      std::string keyword;
      header >> keyword;
      if (keyword == "diagram:") {
        std::string rest;
        std::getline(header, rest);
        if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
        p.diagram_name = rest;
      } else if (keyword == "radius:") {
        header >> p.radius;
      } else if (keyword == "complete:") {
        std::string value;
        header >> value;
        if (value != "true" && value != "false")
          throw ParseError(line_no, "complete must be true or false");
        p.complete = value == "true";
      } else {
        throw ParseError(line_no, "unknown header '" + keyword + "'");
      }
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(line_no, "expected <label>\\t<coefficient>");
    LabelVector label;
    std::istringstream coords(line.substr(0, tab));
    std::string part;
    while (std::getline(coords, part, ',')) {
      try {
        label.push_back(static_cast<std::uint32_t>(std::stoul(part)));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad label coordinate '" + part + "'");
      }
    }
    std::uint64_t coefficient = 0;
    try {
      coefficient = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad coefficient");
    }
    if (coefficient == 0) throw ParseError(line_no, "coefficients must be positive");
    if (!p.coefficients.emplace(std::move(label), coefficient).second)
      throw ParseError(line_no, "duplicate label");
  }
  return p;
}

}  // namespace ulg
