#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ulg/census.hpp"
#include "ulg/diagram.hpp"
#include "ulg/errors.hpp"
#include "ulg/polynomial_io.hpp"

using namespace ulg;

namespace {

LabelVector label(std::initializer_list<std::uint32_t> values) {
  return LabelVector(values);
}

}  // namespace

TEST_CASE("A3 ball census") {
  CoxeterDiagram a3 = build_chain(3);
  GeodesicCensus census = ball_census(a3, 6);
  CHECK(census.complete());
  CHECK(census.element_count() == 24);
  CHECK(census.level_sizes() ==
        std::vector<std::uint64_t>{1, 3, 5, 6, 5, 3, 1});

  // via the descent recursion, the generating function of the rank-3 chain
  const std::map<LabelVector, std::uint64_t> expected = {
      {label({0, 0, 0}), 1}, {label({0, 0, 1}), 1}, {label({0, 1, 0}), 1},
      {label({0, 1, 1}), 2}, {label({0, 1, 2}), 1}, {label({0, 2, 1}), 1},
      {label({1, 0, 0}), 1}, {label({1, 1, 0}), 2}, {label({1, 1, 1}), 2},
      {label({1, 2, 0}), 1}, {label({1, 2, 1}), 4}, {label({1, 2, 2}), 1},
      {label({1, 3, 1}), 2}, {label({2, 1, 0}), 1}, {label({2, 2, 1}), 1}};
  const LabelPolynomial series = generating_series(census);
  CHECK(series.coefficients == expected);
  CHECK(series.complete);
  CHECK(series.sum_of_coefficients() == 22);
}

TEST_CASE("A1 series") {
  GeodesicCensus census = ball_census(build_chain(1), 1);
  CHECK(census.complete());
  const LabelPolynomial series = generating_series(census);
  CHECK(series.coefficients ==
        std::map<LabelVector, std::uint64_t>{{label({0}), 1}, {label({1}), 1}});
}

TEST_CASE("A4 support matches the shipped label set size") {
  GeodesicCensus census = ball_census(build_chain(4), 10);
  CHECK(census.complete());
  CHECK(generating_series(census).coefficients.size() == 33);
}

TEST_CASE("incomplete census keeps exact truncated counts") {
  CoxeterDiagram d6 = builtin("Dtilde6-paper");
  GeodesicCensus census = ball_census(d6, 14);
  CHECK_FALSE(census.complete());
  const Word w = parse_word(d6, "a1ab3ba2ab4b");
  CHECK(census.count(evaluate(d6, w), label_of(d6, w)) == 1);
}

TEST_CASE("geodesic_count") {
  CoxeterDiagram a2 = build_chain(2);
  GroupElement longest = evaluate(a2, parse_word(a2, "121"));
  CHECK(geodesic_count(a2, longest, label({2, 1})) == 1);
  CHECK(geodesic_count(a2, longest, label({1, 2})) == 1);
  CHECK(geodesic_count(a2, longest, label({3, 0})) == 0);

  CoxeterDiagram a3 = build_chain(3);
  CHECK(geodesic_count(a3, evaluate(a3, parse_word(a3, "13")),
                       label({1, 0, 1})) == 2);

  CoxeterDiagram d6 = builtin("Dtilde6-paper");
  const Word w2 = power(parse_word(d6, "a1ab3ba2ab4b"), 2);
  CHECK(geodesic_count(d6, evaluate(d6, w2), label_of(d6, w2)) == 1);
  CHECK(geodesic_count_by_sweep(d6, evaluate(d6, w2), label_of(d6, w2)) == 1);
  CHECK_THROWS_AS(geodesic_count(a3, identity(a3), label({1, 0})),
                  InvalidArgument);
}

TEST_CASE("is_ulg") {
  CoxeterDiagram a3 = build_chain(3);
  CHECK_FALSE(is_ulg(a3, parse_word(a3, "13")));
  CoxeterDiagram a2 = build_chain(2);
  CHECK(is_ulg(a2, parse_word(a2, "121")));
  CoxeterDiagram d6 = builtin("Dtilde6-paper");
  CHECK(is_ulg(d6, parse_word(d6, "a1ab3ba2ab4b")));
}

TEST_CASE("reduced_words") {
  CoxeterDiagram a2 = build_chain(2);
  GroupElement longest = evaluate(a2, parse_word(a2, "121"));
  CHECK(reduced_words(a2, longest) ==
        std::vector<Word>{parse_word(a2, "121"), parse_word(a2, "212")});
  CHECK(reduced_words(a2, longest, label({1, 2})) ==
        std::vector<Word>{parse_word(a2, "212")});

  CoxeterDiagram star = builtin("Dstar4");
  const Word witness = parse_word(star, "10230120302");
  const auto words =
      reduced_words(star, evaluate(star, witness), label_of(star, witness));
  CHECK(words.size() >= 1);
  CHECK(std::find(words.begin(), words.end(), witness) != words.end());

  CHECK_THROWS_AS(reduced_words(a2, longest, std::nullopt, 1), ResourceError);
}

TEST_CASE("unique geodesic elements") {
  CHECK(unique_geodesic_elements(ball_census(build_chain(3), 6)) == 10);
  CHECK(unique_geodesic_elements(ball_census(build_chain(1), 1)) == 2);
  CHECK(unique_geodesic_elements(ball_census(build_chain(4), 10)) == 17);
  GeodesicCensus truncated = ball_census(builtin("Dstar4"), 10);
  CHECK_FALSE(truncated.complete());
  CHECK_THROWS_AS(unique_geodesic_elements(truncated), InvalidState);
}

TEST_CASE("census counts agree with the recursion") {
  for (std::size_t n : {3u, 4u}) {
    CoxeterDiagram d = build_chain(n);
    GeodesicCensus census = ball_census(d, n * (n + 1) / 2);
    for (const auto& level : census.levels())
      for (const auto& [e, record] : level)
        for (const auto& [lab, count] : record)
          CHECK(geodesic_count(d, e, lab) == count);
  }
  // spot checks in the infinite group
  CoxeterDiagram d6 = builtin("Dtilde6-paper");
  GeodesicCensus census = ball_census(d6, 8);
  std::mt19937_64 rng(99);
  std::vector<std::pair<GroupElement, LabelVector>> pool;
  for (const auto& level : census.levels())
    for (const auto& [e, record] : level)
      for (const auto& [lab, count] : record) pool.emplace_back(e, lab);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& [e, lab] = pool[rng() % pool.size()];
    CHECK(geodesic_count(d6, e, lab) == census.count(e, lab));
  }
}

TEST_CASE("sum rule over labels") {
  CoxeterDiagram a3 = build_chain(3);
  GeodesicCensus census = ball_census(a3, 6);
  for (const auto& level : census.levels())
    for (const auto& [e, record] : level) {
      Count total = 0;
      for (const auto& [lab, count] : record) total += count;
      CHECK(Count(reduced_words(a3, e).size()) == total);
    }
}

TEST_CASE("right-angled series counts walks") {
  // exponent-infinity star: u.l.g. labels biject with walks on the star,
  // counted by visit multiplicities
  CoxeterDiagram star = build_from_edges(
      {"0", "1", "2", "3"}, {}, {{"0", "1"}, {"0", "2"}, {"0", "3"}});
  const std::uint64_t radius = 6;
  GeodesicCensus census = ball_census(star, radius);
  CHECK(generating_series(census).coefficients ==
        test_oracles::walk_counts(star, radius));
}

TEST_CASE("triangle diagram prefixes stay uniquely labelled") {
  CoxeterDiagram triangle = builtin("Atilde2");
  const Word period = parse_word(triangle, "123");
  const Word full = power(period, 3);
  for (std::size_t k = 0; k <= full.size(); ++k) {
    Word prefix(full.begin(), full.begin() + k);
    CHECK(is_ulg(triangle, prefix));
  }
}

TEST_CASE("census is deterministic across thread counts") {
  GeodesicCensus one = ball_census(build_chain(4), 10, 1);
  GeodesicCensus four = ball_census(build_chain(4), 10, 4);
  CHECK(generating_series(one) == generating_series(four));
  CHECK(one.level_sizes() == four.level_sizes());
}

TEST_CASE("census budget errors") {
  CensusOptions options;
  options.radius = 10;
  options.max_pairs = 5;
  CHECK_THROWS_AS(GeodesicCensus(build_chain(4), options), ResourceError);
}

TEST_CASE("polynomial text round-trip") {
  GeodesicCensus census = ball_census(build_chain(3), 6);
  const LabelPolynomial series = generating_series(census);
  const std::string text = format_polynomial(series);
  const LabelPolynomial parsed = parse_polynomial(text);
  CHECK(parsed == series);
  CHECK(parsed.diagram_name == "A3");
  CHECK(format_polynomial(parsed) == text);

  CHECK_THROWS_AS(parse_polynomial("0,0\t0\n"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("0,0\t1\n0,0\t2\n"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("junk\n"), ParseError);
}
