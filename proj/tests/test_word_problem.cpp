#include "catch_amalgamated.hpp"

#include "autgrp/construct.hpp"
#include "autgrp/error.hpp"
#include "autgrp/io.hpp"
#include "autgrp/word_problem.hpp"
#include "oracles.hpp"

using namespace autgrp;

namespace {

Generator pos(StateId q) { return {q, false}; }
Generator neg(StateId q) { return {q, true}; }

}  // namespace

TEST_CASE("reduce is free reduction") {
  StateId const a = 1, b = 2, c = 3;
  CHECK(reduce({{pos(a), neg(a)}}).factors.empty());
  CHECK(reduce({{pos(a), pos(b), neg(b), pos(c)}}).factors ==
        std::vector<Generator>{pos(a), pos(c)});
  CHECK(reduce({{pos(a), pos(b)}}).factors == std::vector<Generator>{pos(a), pos(b)});
  CHECK(reduce({{neg(a), pos(b), neg(b), pos(a)}}).factors.empty());
  CHECK(reduce({{pos(a), pos(kIdentity), neg(a)}}).factors.empty());
}

TEST_CASE("is_trivial on gabc") {
  auto const a = builtin("gabc");
  CHECK(is_trivial(a, parse_word("c*c", a)).trivial());
  CHECK(is_trivial(a, parse_word("a*b*c", a).pow(2)).trivial());
  CHECK(is_trivial(a, GroupWord{}).trivial());

  auto const v = is_trivial(a, parse_word("a*b", a));
  REQUIRE(v.nontrivial());
  CHECK(act(a, parse_word("a*b", a), v.witness) != v.witness);
}

TEST_CASE("is_trivial reports an exhausted budget") {
  auto const a = builtin("gabc");
  auto const v = is_trivial(a, parse_word("a*b*c", a).pow(2), 2);
  CHECK(v.exceeded());
  CHECK(v.explored > 2);
  CHECK_THROWS_AS(is_trivial(a, GroupWord{}, 0), Error);
}

TEST_CASE("are_equal") {
  auto const g = builtin("gab");
  CHECK(are_equal(g, parse_word("b*b", g), parse_word("c", g)).trivial());
  CHECK(are_equal(g, parse_word("a", g), parse_word("a", g)).trivial());

  auto const a = builtin("gabc");
  auto const v = are_equal(a, parse_word("a", a), parse_word("b", a));
  REQUIRE(v.nontrivial());
  // Brute-force cross-check: a and b differ on some word of length <= 4.
  bool differ = false;
  oracle::for_each_word(3, 4, [&](InputWord const& w) {
    differ |= oracle::act_word(a, parse_word("a", a), w) !=
              oracle::act_word(a, parse_word("b", a), w);
  });
  CHECK(differ);
}

TEST_CASE("element_order") {
  auto const a = builtin("gabc");
  CHECK(element_order(a, parse_word("c", a), 10) == 2u);
  CHECK_FALSE(element_order(a, parse_word("a*b", a), 50).has_value());

  auto const g = builtin("gab");
  CHECK(element_order(g, parse_word("b", g), 10) == 4u);
  CHECK(element_order(g, parse_word("a*b", g), 10) == 4u);
  CHECK(element_order(g, parse_word("a", g), 10) == 2u);
  CHECK_THROWS_AS(element_order(g, parse_word("a", g), 0), Error);
  CHECK_THROWS_AS(element_order(a, parse_word("a*b*c", a), 4, 1), Error);

  // order(g) = k: g^k trivial and no smaller power is.
  for (auto text : {"b", "a*b", "c", "a*b^2*a*b^2"}) {
    auto const w = parse_word(text, g);
    auto const k = element_order(g, w, 16);
    if (!k) continue;
    CHECK(is_trivial(g, w.pow(*k)).trivial());
    for (std::size_t j = 1; j < *k; ++j) CHECK(is_trivial(g, w.pow(j)).nontrivial());
  }
}

TEST_CASE("is_trivial agrees with brute force on short words") {
  for (auto name : builtin_names()) {
    auto const a = builtin(name);
    INFO(name);
    for (auto const& g : oracle::all_words(a, 3)) {
      auto const v = is_trivial(a, g);
      REQUIRE_FALSE(v.exceeded());
      REQUIRE(v.trivial() == oracle::fixes_all(a, g, 6));
      if (v.nontrivial()) {
        REQUIRE(oracle::act_word(a, g, v.witness) != v.witness);
      }
      // A nontrivial root permutation forces a nontrivial verdict.
      if (!root_perm(a, g).is_identity()) REQUIRE(v.nontrivial());
    }
  }
}

TEST_CASE("total b-exponent not divisible by 4 moves the root in gab") {
  auto const g = builtin("gab");
  auto const b = g.id("b");
  auto const c = g.id("c");
  for (auto const& w : oracle::all_words(g, 4)) {
    // c = b^2 counts twice.
    if ((w.exponent_sum(b) + 2 * w.exponent_sum(c)) % 4 != 0) {
      REQUIRE_FALSE(root_perm(g, w).is_identity());
      REQUIRE(is_trivial(g, w).nontrivial());
    }
  }
}

TEST_CASE("minimize") {
  SECTION("gabc has nothing to merge") {
    auto const a = builtin("gabc");
    auto const m = minimize(a);
    CHECK(m.automaton == a);
    for (auto const& [from, to] : m.mapping) CHECK(from == to);
  }

  SECTION("identity delay states collapse into e") {
    auto const power = direct_power(builtin("adding"), 2);
    auto const m = minimize(power);
    CHECK(m.mapping.at("e@2") == "e");
    CHECK(m.mapping.at("e") == "e");
    CHECK(m.mapping.at("q@1") == "q@1");
    CHECK(m.automaton.states().size() == 2);
    CHECK(validate(m.automaton).empty());
  }

  SECTION("identical rules merge") {
    auto const a = parse_automaton(
        "alphabet 2\n"
        "state p = (12) (e, p)\n"
        "state r = (12) (e, r)\n"
        "state s = id (p, r)\n");
    auto const m = minimize(a);
    CHECK(m.mapping.at("r") == "p");
    CHECK(m.automaton.states().size() == 2);
    CHECK(m.automaton.states()[1].rule.restrictions == std::vector<std::string>{"p", "p"});
  }

  SECTION("minimization preserves the action") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      auto const a = oracle::random_automaton(rng, 3, 5);
      auto const m = minimize(a);
      REQUIRE(validate(m.automaton).empty());
      for (StateId q = 0; q < a.size(); ++q) {
        StateId const image = m.automaton.id(m.mapping.at(a.name(q)));
        oracle::for_each_word(a.degree(), 5, [&](InputWord const& w) {
          REQUIRE(act_state(a, q, w) == act_state(m.automaton, image, w));
        });
      }
    }
  }
}

TEST_CASE("check_decomposition") {
  auto const a = builtin("gabc");
  Decomposition const ab{Permutation::identity(3),
                         {parse_word("a*c", a), parse_word("c*a", a), GroupWord{}}};
  CHECK(check_decomposition(a, parse_word("a*b", a), ab));

  auto const g = builtin("gab");
  auto const b2 = parse_word("b^2", g);
  Decomposition const ab2{parse_permutation("(12)(34)", 4),
                          {b2, parse_word("a", g), parse_word("b^2*a", g), GroupWord{}}};
  CHECK(check_decomposition(g, parse_word("a*b^2", g), ab2));

  auto wrong_root = ab2;
  wrong_root.root = compose(ab2.root, parse_permutation("(12)", 4));
  CHECK_FALSE(check_decomposition(g, parse_word("a*b^2", g), wrong_root));

  Decomposition const short_claim{Permutation::identity(3), {GroupWord{}}};
  CHECK_THROWS_AS(check_decomposition(a, GroupWord{}, short_claim), Error);
}
