#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ulg/census.hpp"
#include "ulg/diagram.hpp"
#include "ulg/dtilde6.hpp"
#include "ulg/element.hpp"
#include "ulg/errors.hpp"
#include "ulg/polynomial_io.hpp"
#include "ulg/treepath.hpp"
#include "ulg/typea.hpp"

namespace py = pybind11;
using namespace ulg;

namespace {

// Python-facing counts as strings keyed by comma-separated labels; exact and
// hashable on the Python side without a bignum dependency.
py::dict series_dict(const LabelPolynomial& series) {
  py::dict out;
  for (const auto& [label, coefficient] : series.coefficients)
    out[py::str(format_label(label))] = coefficient;
  return out;
}

}  // namespace

PYBIND11_MODULE(_ulgcox, m) {
  m.doc() = "uniquely labelled geodesics on Coxeter diagrams";

  py::register_exception<InvalidArgument>(m, "InvalidArgumentError",
                                          PyExc_ValueError);
  py::register_exception<ParseError>(m, "FormatParseError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "EntryOverflowError",
                                        PyExc_OverflowError);
  py::register_exception<ResourceError>(m, "ResourceLimitError",
                                        PyExc_RuntimeError);
  py::register_exception<InvalidState>(m, "InvalidStateError",
                                       PyExc_RuntimeError);

  py::class_<CoxeterDiagram>(m, "Diagram")
      .def_static("chain", &build_chain, py::arg("n"))
      .def_static("builtin", &builtin, py::arg("name"))
      .def_static(
          "parse",
          [](const std::string& text) { return parse_diagram(text); },
          py::arg("text"))
      .def_property_readonly("rank", &CoxeterDiagram::rank)
      .def_property_readonly("names", &CoxeterDiagram::names)
      .def("serialize", &CoxeterDiagram::serialize)
      .def("__repr__", [](const CoxeterDiagram& d) {
        return "<Diagram rank " + std::to_string(d.rank()) + ">";
      });

  m.def("word_length", [](const CoxeterDiagram& d, const std::string& text) {
    return length(d, evaluate(d, parse_word(d, text)));
  });
  m.def("is_reduced", [](const CoxeterDiagram& d, const std::string& text) {
    return is_reduced(d, parse_word(d, text));
  });
  m.def("is_ulg", [](const CoxeterDiagram& d, const std::string& text) {
    return is_ulg(d, parse_word(d, text));
  });
  m.def("label_of", [](const CoxeterDiagram& d, const std::string& text) {
    return format_label(label_of(d, parse_word(d, text)));
  });
  m.def(
      "geodesic_count",
      [](const CoxeterDiagram& d, const std::string& word,
         const std::string& label) {
        const Word w = parse_word(d, word);
        return geodesic_count(d, evaluate(d, w), parse_label(d, label))
            .get_str();
      },
      py::arg("diagram"), py::arg("word"), py::arg("label"));
  m.def(
      "reduced_words",
      [](const CoxeterDiagram& d, const std::string& word,
         const std::optional<std::string>& label, std::uint64_t cap) {
        std::optional<LabelVector> filter;
        if (label) filter = parse_label(d, *label);
        std::vector<std::string> out;
        for (const Word& w :
             reduced_words(d, evaluate(d, parse_word(d, word)), filter, cap))
          out.push_back(format_word(d, w));
        return out;
      },
      py::arg("diagram"), py::arg("word"), py::arg("label") = std::nullopt,
      py::arg("cap") = 1'000'000);

  m.def(
      "generating_series",
      [](const CoxeterDiagram& d, std::uint64_t radius, unsigned threads) {
        GeodesicCensus census = ball_census(d, radius, threads, false);
        const LabelPolynomial series = generating_series(census);
        py::dict out;
        out["coefficients"] = series_dict(series);
        out["complete"] = series.complete;
        out["radius"] = series.radius;
        return out;
      },
      py::arg("diagram"), py::arg("radius"), py::arg("threads") = 1);
  m.def("format_series",
        [](const CoxeterDiagram& d, std::uint64_t radius, unsigned threads) {
          GeodesicCensus census = ball_census(d, radius, threads, false);
          return format_polynomial(generating_series(census));
        },
        py::arg("diagram"), py::arg("radius"), py::arg("threads") = 1);
  m.def("unique_geodesic_elements",
        [](const CoxeterDiagram& d, std::uint64_t radius) {
          GeodesicCensus census = ball_census(d, radius, 1, false);
          return unique_geodesic_elements(census);
        });

  m.def("classify_label", [](std::size_t n, const std::string& label_text) {
    LabelVector label;
    std::istringstream in(label_text);
    std::string part;
    while (std::getline(in, part, ','))
      label.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    return to_string(classify_label(n, label).tag);
  });
  m.def("typea_coefficient", [](std::size_t n, const std::string& label_text) {
    LabelVector label;
    std::istringstream in(label_text);
    std::string part;
    while (std::getline(in, part, ','))
      label.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    return typea_coefficient(n, label);
  });
  m.def("nonzero_coefficient_count", &nonzero_coefficient_count);
  m.def("unique_geodesic_count", &unique_geodesic_count);
  m.def("max_ulg_length", &max_ulg_length);
  m.def("total_ulg_count", [](std::size_t n, bool include_identity) {
    const UlgTotal totals = total_ulg_count(n, include_identity);
    return py::make_tuple(totals.closed_form, totals.enumerated);
  });

  m.def("dtilde6_power_length",
        [](const std::string& variant, std::size_t n) {
          return dtilde6::power_length(dtilde6::parse_variant(variant), n);
        });
  m.def("dtilde6_power_is_ulg",
        [](const std::string& variant, std::size_t n) {
          return dtilde6::power_is_ulg(dtilde6::parse_variant(variant), n);
        });
  m.def("dtilde6_case_report", [] {
    return dtilde6::format_case_report(dtilde6::run_case_corpus());
  });
  m.def("dtilde6_fellow_travel", [](const std::string& line,
                                    std::size_t prefix_length) {
    const dtilde6::WordFamily family = dtilde6::ulg_word_family();
    const Word period = line == "w3" ? family.w3 : family.w2;
    const Word anchor =
        line == "w3" ? dtilde6::w3_anchor() : dtilde6::w2_anchor();
    const auto profile =
        dtilde6::fellow_travel_profile(family.w, period, anchor, prefix_length);
    return py::make_tuple(profile.min_distance, profile.max_distance,
                          profile.raw_unanchored_min);
  });
}
