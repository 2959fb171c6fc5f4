#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ulg/census.hpp"
#include "ulg/diagram.hpp"
#include "ulg/element.hpp"
#include "ulg/errors.hpp"

using namespace ulg;
using test_oracles::Permutation;
using test_oracles::word_for;

TEST_CASE("identity and involution") {
  for (const char* name : {"A3", "Dtilde6-paper", "A1"}) {
    CoxeterDiagram d = builtin(name);
    GroupElement e = identity(d);
    CHECK(e.is_identity());
    CHECK(length(d, e) == 0);
    for (std::size_t g = 0; g < d.rank(); ++g) {
      CHECK(right_multiply(d, right_multiply(d, e, g), g) == e);
      CHECK_FALSE(is_right_descent(d, e, g));
    }
  }
}

TEST_CASE("braid and commutation relations") {
  CoxeterDiagram a2 = build_chain(2);
  CHECK(evaluate(a2, parse_word(a2, "121")) == evaluate(a2, parse_word(a2, "212")));
  CHECK(length(a2, evaluate(a2, parse_word(a2, "1212"))) == 2);

  CoxeterDiagram a3 = build_chain(3);
  CHECK(evaluate(a3, parse_word(a3, "13")) == evaluate(a3, parse_word(a3, "31")));

  // infinite pair: the products (gh)^k stay pairwise distinct
  CoxeterDiagram racg = build_from_edges({"a", "b"}, {}, {{"a", "b"}});
  std::set<std::vector<std::int64_t>> keys;
  GroupElement e = identity(racg);
  for (int k = 1; k <= 12; ++k) {
    e = right_multiply(racg, e, 0);
    e = right_multiply(racg, e, 1);
    CHECK(keys.insert(e.key()).second);
  }
}

TEST_CASE("descents") {
  CoxeterDiagram a2 = build_chain(2);
  GroupElement s1 = evaluate(a2, parse_word(a2, "1"));
  CHECK(is_right_descent(a2, s1, 0));
  CHECK_FALSE(is_right_descent(a2, s1, 1));
  GroupElement s1s2 = evaluate(a2, parse_word(a2, "12"));
  CHECK(is_right_descent(a2, s1s2, 1));
  CHECK_FALSE(is_right_descent(a2, s1s2, 0));
  // brute force over all length-2 elements: descent iff appending shortens
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) {
      GroupElement e = evaluate(a2, Word{a, b});
      for (std::uint32_t g = 0; g < 2; ++g) {
        const std::uint64_t before = length(a2, e);
        const std::uint64_t after = length(a2, right_multiply(a2, e, g));
        CHECK(is_right_descent(a2, e, g) == (after < before));
      }
    }
}

TEST_CASE("evaluate and reducedness") {
  CoxeterDiagram a2 = build_chain(2);
  CHECK(evaluate(a2, Word{}).is_identity());
  CHECK(evaluate(a2, parse_word(a2, "11")).is_identity());

  CoxeterDiagram star = builtin("Dstar4");
  CHECK(evaluate(star, parse_word(star, "0102030102030")) ==
        evaluate(star, parse_word(star, "10230120302")));
  CHECK(is_reduced(star, parse_word(star, "10230120302")));
  CHECK_FALSE(is_reduced(star, parse_word(star, "0102030102030")));

  CoxeterDiagram d6 = builtin("Dtilde6-paper");
  CHECK(is_reduced(d6, parse_word(d6, "a1ab3ba2ab4b")));
  CHECK_FALSE(is_reduced(d6, parse_word(d6, "a1ab3ba2ab4bb")));
  // powers of a1a2ab3b4b collapse from the third period on
  Word base = parse_word(d6, "a1a2ab3b4b");
  CHECK(is_reduced(d6, power(base, 2)));
  CHECK(length(d6, evaluate(d6, power(base, 2))) == 20);
  CHECK_FALSE(is_reduced(d6, power(base, 3)));
  CHECK(length(d6, evaluate(d6, power(base, 3))) == 26);
}

TEST_CASE("inverse") {
  CoxeterDiagram a2 = build_chain(2);
  CHECK(inverse(a2, identity(a2)).is_identity());
  CHECK(inverse(a2, evaluate(a2, parse_word(a2, "12"))) ==
        evaluate(a2, parse_word(a2, "21")));

  CoxeterDiagram d6 = builtin("Dtilde6-paper");
  std::mt19937_64 rng(20240801);
  std::uniform_int_distribution<std::uint32_t> letter(0, 5);
  std::uniform_int_distribution<std::size_t> word_length(0, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w(word_length(rng));
    for (auto& g : w) g = letter(rng);
    GroupElement e = evaluate(d6, w);
    GroupElement inv = inverse(d6, e);
    CHECK(length(d6, inv) == length(d6, e));
    CHECK(multiply(d6, e, inv).is_identity());
  }
}

TEST_CASE("subadditivity") {
  CoxeterDiagram d6 = builtin("Dtilde6-paper");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> letter(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    Word u(rng() % 12), v(rng() % 12);
    for (auto& g : u) g = letter(rng);
    for (auto& g : v) g = letter(rng);
    const std::int64_t lu = static_cast<std::int64_t>(length(d6, evaluate(d6, u)));
    const std::int64_t luv =
        static_cast<std::int64_t>(length(d6, evaluate(d6, concat(u, v))));
    CHECK(std::abs(luv - lu) <= static_cast<std::int64_t>(v.size()));
  }
}

TEST_CASE("deletion property, exhaustive on short A3 words") {
  CoxeterDiagram a3 = build_chain(3);
  std::vector<Word> stack{Word{}};
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (const Word& w : stack)
      for (std::uint32_t g = 0; g < 3; ++g) next.push_back(concat(w, {g}));
    stack = next;
    for (const Word& w : stack) {
      if (is_reduced(a3, w)) continue;
      const GroupElement target = evaluate(a3, w);
      bool found = false;
      for (std::size_t i = 0; i < w.size() && !found; ++i)
        for (std::size_t j = i + 1; j < w.size() && !found; ++j) {
          Word shorter;
          for (std::size_t k = 0; k < w.size(); ++k)
            if (k != i && k != j) shorter.push_back(w[k]);
          if (evaluate(a3, shorter) == target) found = true;
        }
      CAPTURE(format_word(a3, w));
      CHECK(found);
    }
  }
}

TEST_CASE("permutation cross-representation oracle") {
  for (std::size_t n : {3u, 4u}) {
    CoxeterDiagram d = build_chain(n);
    Permutation p(n + 1);
    std::map<Permutation, std::vector<std::int64_t>> seen;
    do {
      const Word w = word_for(p);
      const GroupElement e = evaluate(d, w);
      CHECK(length(d, e) == p.inversions());
      CHECK(seen.emplace(p, e.key()).second);
      std::next_permutation(p.p.begin(), p.p.end());
    } while (!(p == Permutation(n + 1)));
    // distinct permutations produced distinct matrices
    std::set<std::vector<std::int64_t>> keys;
    for (const auto& [perm, key] : seen) keys.insert(key);
    CHECK(keys.size() == seen.size());
  }

  // seeded random words in A5
  CoxeterDiagram a5 = build_chain(5);
  std::mt19937_64 rng(123456);
  std::uniform_int_distribution<std::uint32_t> letter(0, 4);
  std::uniform_int_distribution<std::size_t> word_length(0, 20);
  for (int trial = 0; trial < 10000; ++trial) {
    Word w(word_length(rng));
    for (auto& g : w) g = letter(rng);
    Permutation p(6);
    for (auto g : w) p.right_multiply(g);
    CHECK(length(a5, evaluate(a5, w)) == p.inversions());
  }
}

TEST_CASE("checked arithmetic refuses to wrap") {
  CHECK(detail::checked_add(1, 2) == 3);
  CHECK(detail::checked_mul(-3, 4) == -12);
  CHECK_THROWS_AS(detail::checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(detail::checked_mul(INT64_MAX / 2, 3), OverflowError);
  CHECK_THROWS_AS(detail::checked_sub(INT64_MIN, 1), OverflowError);
}
