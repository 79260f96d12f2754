// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Timing limits are checked on wall-clock time.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "autgrp/action.hpp"
#include "autgrp/construct.hpp"
#include "autgrp/io.hpp"
#include "autgrp/verify.hpp"
#include "autgrp/word_problem.hpp"
#include "oracles.hpp"

using namespace autgrp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, std::string const& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, std::string const& title, double limit_seconds,
               std::function<void(Outcome&)> const& body) {
  Outcome outcome;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (std::exception const& e) {
    outcome.ok = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  double const seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds && outcome.ok) {
    outcome.ok = false;
    outcome.detail = "over time limit of " + std::to_string(limit_seconds) + " s";
  }
  if (!outcome.ok) ++failures;
  std::printf("[%s] %d. %s (%.3f s%s%s)\n", outcome.ok ? "PASS" : "FAIL", number, title.c_str(),
              seconds, outcome.detail.empty() ? "" : "; ", outcome.detail.c_str());
}

bool all_passed(SuiteReport const& report, Outcome& outcome) {
  for (auto const& c : report.claims()) {
    if (!c.passed) {
      outcome.require(false, report.name() + " " + c.id + " " + c.params + " -> " + c.verdict);
      return false;
    }
  }
  return true;
}

std::size_t count_claims(SuiteReport const& report, std::string const& prefix) {
  std::size_t n = 0;
  for (auto const& c : report.claims()) n += c.id.rfind(prefix, 0) == 0;
  return n;
}

// Nontrivial with a witness that the oracle confirms is moved.
void expect_nontrivial(Automaton const& a, GroupWord const& g, std::string const& what,
                       Outcome& outcome) {
  auto const verdict = is_trivial(a, g);
  outcome.require(verdict.nontrivial(), what + " not reported nontrivial");
  if (verdict.nontrivial()) {
    outcome.require(oracle::act_word(a, g, verdict.witness) != verdict.witness,
                    what + " witness is fixed");
  }
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "adding machine agrees with binary increment for l <= 10", 1.0, [](Outcome& o) {
    auto const a = builtin("adding");
    StateId const q = a.id("q");
    for (std::size_t l = 1; l <= 10; ++l) {
      oracle::for_each_word(2, l, [&](InputWord const& w) {
        o.require(act_state(a, q, w) == oracle::increment(w), "mismatch at " + format_letters(w));
      });
    }
  });

  criterion(2, "gabc relations a^2, b^2, c^2, (abc)^2 are trivial", 1.0, [](Outcome& o) {
    auto const a = builtin("gabc");
    for (auto text : {"a^2", "b^2", "c^2", "a*b*c*a*b*c"}) {
      o.require(is_trivial(a, parse_word(text, a)).trivial(), std::string(text));
    }
  });

  criterion(3, "gabc powers and families [1]-[8] are nontrivial", 5.0, [](Outcome& o) {
    auto const a = builtin("gabc");
    auto const w = [&](char const* s) { return parse_word(s, a); };
    auto const ab = w("a*b"), ac = w("a*c"), bc = w("b*c"), ca = w("c*a");
    for (auto const* base : {&ab, &ac, &bc}) {
      for (std::size_t n = 1; n <= 20; ++n) {
        expect_nontrivial(a, base->pow(n), to_string(*base, a) + " ^" + std::to_string(n), o);
      }
    }
    auto const ga = w("a"), gb = w("b"), gc = w("c"), none = GroupWord{};
    struct Shape {
      GroupWord const* prefix;
      GroupWord const* tail;
      GroupWord const* suffix;
    };
    Shape const shapes[] = {{&none, &ac, &none}, {&none, &ca, &none}, {&none, &ac, &ga},
                            {&none, &ca, &gc},   {&gb, &ac, &none},   {&gb, &ca, &none},
                            {&gb, &ac, &ga},     {&gb, &ca, &gc}};
    for (auto const& s : shapes) {
      for (std::size_t k = 0; k <= 6; ++k) {
        for (std::size_t m = 0; m <= 6; ++m) {
          auto const g = *s.prefix * ab.pow(k) * s.tail->pow(m) * *s.suffix;
          if (g.empty()) continue;
          expect_nontrivial(a, g, to_string(g, a), o);
        }
      }
    }
    all_passed(gabc_suite(6, 20), o);
  });

  criterion(4, "gab relations, b^2 = c and element orders", 1.0, [](Outcome& o) {
    auto const a = builtin("gab");
    auto const w = [&](char const* s) { return parse_word(s, a); };
    o.require(is_trivial(a, w("a^2")).trivial(), "a^2");
    o.require(is_trivial(a, w("b^4")).trivial(), "b^4");
    o.require(is_trivial(a, w("a*b").pow(4)).trivial(), "(ab)^4");
    o.require(are_equal(a, w("b^2"), w("c")).trivial(), "b^2 = c");
    o.require(element_order(a, w("b"), 100) == std::optional<std::size_t>{4}, "order(b)");
    o.require(element_order(a, w("a*b"), 100) == std::optional<std::size_t>{4}, "order(ab)");
  });

  criterion(5, "gab families and parity subcases are nontrivial, root test holds", 10.0,
            [](Outcome& o) {
    auto const report = gab_suite(6);
    all_passed(report, o);
    for (std::string id : {"[1]", "[5]", "[8]", "[9.1]", "[12.2]", "root-perm"}) {
      o.require(count_claims(report, id) > 0, "no claims for " + id);
    }
    // Independent root check; c = b^2 counts twice toward the b-exponent.
    auto const a = builtin("gab");
    for (auto const& g : oracle::all_words(a, 4)) {
      if ((g.exponent_sum(a.id("b")) + 2 * g.exponent_sum(a.id("c"))) % 4 == 0) continue;
      bool moved = false;
      for (Letter x = 1; x <= 4; ++x) moved |= oracle::act_word(a, g, {x}) != InputWord{x};
      o.require(moved, "root fixed by " + to_string(g, a));
      o.require(!root_perm(a, g).is_identity(), "root_perm id for " + to_string(g, a));
    }
  });

  criterion(6, "wreath identities replay, negative controls fail", 10.0, [](Outcome& o) {
    auto const report = decomposition_replay(4);
    all_passed(report, o);
    std::size_t controls = 0;
    for (auto const& c : report.claims()) {
      if (c.id.rfind("control", 0) == 0) {
        ++controls;
        o.require(c.verdict == "fails", c.id + " did not fail");
      }
    }
    o.require(controls > 0, "no negative controls");
  });

  criterion(7, "direct powers interleave, levels commute, literal variant fails", 10.0,
            [](Outcome& o) {
    std::mt19937_64 rng(VerifyDefaults::seed);
    for (auto name : builtin_names()) {
      auto const base = builtin(name);
      std::size_t const d = base.degree();
      for (std::size_t levels = 1; levels <= 3; ++levels) {
        auto const power = direct_power(base, levels);
        for (int sample = 0; sample < 100; ++sample) {
          std::size_t const len = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
          std::vector<InputWord> streams(levels);
          for (auto& s : streams) {
            for (std::size_t i = 0; i < len; ++i) {
              s.push_back(std::uniform_int_distribution<Letter>(1, Letter(d))(rng));
            }
          }
          auto const word = oracle::interleave_positional(streams);
          for (auto const& def : base.states()) {
            auto const q = base.id(def.name);
            for (std::size_t j = 1; j <= levels; ++j) {
              auto expected = streams;
              expected[j - 1] = oracle::act_word(base, GroupWord{{Generator{q, false}}},
                                                 streams[j - 1]);
              auto const got = act_state(power, power.id(power_name(def.name, j)), word);
              o.require(got == oracle::interleave_positional(expected),
                        std::string(name) + " " + power_name(def.name, j));
            }
          }
        }
        auto const commutation = power_commutation_suite(base, levels);
        for (auto const& c : commutation.claims()) {
          if (c.id == "cross-level") {
            o.require(c.verdict == "trivial", std::string(name) + " " + c.params);
          }
        }
      }
    }
    auto const adding = builtin("adding");
    auto const literal = direct_power(adding, 2, PowerVariant::literal);
    auto const out = act_state(literal, literal.id("q@1"), InputWord{2, 1, 2, 1});
    o.require(out == InputWord{1, 1, 2, 1}, "literal output " + format_letters(out));
    o.require(out != InputWord{1, 1, 1, 1}, "literal variant satisfies property (1)");
    std::array<std::size_t, 3> const levels{1, 2, 3};
    all_passed(power_suite(levels), o);
  });

  criterion(8, "word problem agrees with depth-6 fixed-point check", 0.0, [](Outcome& o) {
    std::size_t checked = 0, agreed = 0;
    for (auto name : builtin_names()) {
      auto const a = builtin(name);
      for (auto const& g : oracle::all_words(a, 3)) {
        ++checked;
        bool const fixed = oracle::fixes_all(a, g, 6);
        bool const trivial = is_trivial(a, g).trivial();
        if (fixed == trivial) {
          ++agreed;
        } else {
          o.require(false, std::string(name) + " " + to_string(g, a));
        }
      }
    }
    o.detail = std::to_string(agreed) + "/" + std::to_string(checked) + " agree" +
               (o.ok ? "" : ", first: " + o.detail);
  });

  criterion(9, "DSL, DOT and inverse round trips", 0.0, [](Outcome& o) {
    for (auto name : builtin_names()) {
      auto const a = builtin(name);
      auto const text = print_automaton(a);
      o.require(print_automaton(parse_automaton(text)) == text, std::string(name) + " DSL");
      o.require(parse_automaton(text) == a, std::string(name) + " structure");
      auto const golden = read_file(std::string(AUTGRP_GOLDEN_DIR) + "/" + std::string(name) + ".dot");
      o.require(!golden.empty() && export_dot(a) == golden, std::string(name) + " DOT golden");

      auto const inv = inverse_automaton(a);
      for (auto const& def : a.states()) {
        StateId const q = a.id(def.name);
        StateId const qi = inv.id(inverse_name(def.name));
        for (std::size_t l = 0; l <= 8; ++l) {
          oracle::for_each_word(a.degree(), l, [&](InputWord const& w) {
            o.require(act_state(inv, qi, act_state(a, q, w)) == w,
                      std::string(name) + " inverse " + def.name);
          });
        }
      }
    }
    std::mt19937_64 rng(VerifyDefaults::seed);
    for (int i = 0; i < 1000; ++i) {
      auto const a = oracle::random_automaton(rng, 5, 6);
      auto const text = print_automaton(a);
      auto const back = parse_automaton(text);
      o.require(back == a && print_automaton(back) == text, "random automaton " + std::to_string(i));
    }
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
