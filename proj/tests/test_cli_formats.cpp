#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "ulg/diagram.hpp"
#include "ulg/errors.hpp"
#include "ulg/word.hpp"

using namespace ulg;

TEST_CASE("diagram files") {
  const std::string path = "test_diagram_tmp.cox";
  {
    std::ofstream out(path);
    out << "# a chain with one marked pair\n";
    out << "vertices: p q r\n";
    out << "edges: p-q\n";
    out << "infinite: q-r\n";
  }
  const CoxeterDiagram d = load_diagram_file(path);
  CHECK(d.rank() == 3);
  CHECK(d.exponent(0, 1) == Exponent::three);
  CHECK(d.exponent(1, 2) == Exponent::infinity);
  CHECK(d.exponent(0, 2) == Exponent::two);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_diagram_file("no_such_file.cox"), InvalidArgument);
}

TEST_CASE("word round-trips") {
  std::mt19937_64 rng(5);
  for (const char* name : {"A5", "Dtilde6-paper", "Dstar4"}) {
    CoxeterDiagram d = builtin(name);
    std::uniform_int_distribution<std::uint32_t> letter(
        0, static_cast<std::uint32_t>(d.rank() - 1));
    for (int trial = 0; trial < 50; ++trial) {
      Word w(rng() % 16);
      for (auto& g : w) g = letter(rng);
      CHECK(parse_word(d, format_word(d, w)) == w);
    }
  }
}

TEST_CASE("label round-trips") {
  CoxeterDiagram d = builtin("Dstar4");
  const LabelVector label{5, 2, 1, 1};
  CHECK(parse_label(d, format_label(label)) == label);
  CHECK(format_label(label) == "5,2,1,1");
}

TEST_CASE("word helpers") {
  CoxeterDiagram a3 = build_chain(3);
  const Word w = parse_word(a3, "121");
  CHECK(power(w, 2) == parse_word(a3, "121121"));
  CHECK(reversed(parse_word(a3, "12")) == parse_word(a3, "21"));
  CHECK(degree(label_of(a3, w)) == 3);
}
