#include "autgrp/verify.hpp"

#include <array>
#include <functional>
#include <random>
#include <string>

#include "autgrp/action.hpp"
#include "autgrp/construct.hpp"
#include "autgrp/error.hpp"

namespace autgrp {

namespace {

std::string kv(std::initializer_list<std::pair<char const*, std::size_t>> params) {
  std::string out;
  for (auto const& [key, value] : params) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

// Records is_trivial(g) against `expected`. A nontrivial verdict only counts
// if its witness is really moved by g.
void claim_word(SuiteReport& report, Automaton const& a, std::string id, std::string params,
                GroupWord const& g, Expectation expected, std::size_t budget) {
  auto const verdict = is_trivial(a, g, budget);
  std::string text(to_string(verdict.kind));
  std::string detail;
  if (verdict.nontrivial()) {
    detail = "moves " + format_letters(verdict.witness);
    if (act(a, g, verdict.witness) == verdict.witness) {
      text = "invalid-witness";
    }
  } else {
    detail = "closed after " + std::to_string(verdict.explored) + " states";
  }
  report.add(std::move(id), std::move(params), expected, std::move(text), std::move(detail));
}

void claim_equal(SuiteReport& report, Automaton const& a, std::string id, std::string params,
                 GroupWord const& g, GroupWord const& h, Expectation expected,
                 std::size_t budget) {
  auto const verdict = are_equal(a, g, h, budget);
  std::string text = verdict.trivial()      ? "equal"
                     : verdict.nontrivial() ? "not-equal"
                                            : "budget-exceeded";
  std::string detail = verdict.nontrivial() ? "differ on " + format_letters(verdict.witness)
                                            : std::string();
  report.add(std::move(id), std::move(params), expected, std::move(text), std::move(detail));
}

void claim_decomposition(SuiteReport& report, Automaton const& a, std::string id,
                         std::string params, GroupWord const& g, Decomposition const& claimed,
                         Expectation expected, std::size_t budget) {
  std::string text;
  try {
    text = check_decomposition(a, g, claimed, budget) ? "holds" : "fails";
  } catch (Error const& e) {
    if (e.kind() != ErrorKind::budget_exceeded) throw;
    text = "budget-exceeded";
  }
  report.add(std::move(id), std::move(params), expected, std::move(text));
}

struct Words {
  explicit Words(Automaton const& automaton) : a(automaton) {}
  GroupWord operator()(std::string_view text) const { return parse_word(text, a); }
  Automaton const& a;
};

Decomposition wreath(Automaton const& a, std::string_view root,
                     std::vector<GroupWord> coords) {
  return {parse_permutation(root, a.degree()), std::move(coords)};
}

}  // namespace

SuiteReport gabc_suite(std::size_t kmax, std::size_t nmax, std::size_t budget) {
  if (kmax < 1 || nmax < 1) throw Error(ErrorKind::invalid_argument, "kmax and nmax must be >= 1");
  auto const a = builtin("gabc");
  Words w(a);
  SuiteReport report("gabc");

  for (auto rel : {"a^2", "b^2", "c^2", "(abc)^2"}) {
    std::string text = rel;
    GroupWord g = text == "(abc)^2" ? w("a*b*c").pow(2) : w(text);
    claim_word(report, a, "relation", text, g, Expectation::trivial, budget);
  }

  auto const ab = w("a*b"), ac = w("a*c"), bc = w("b*c"), ca = w("c*a");
  for (auto const& [name, base] : {std::pair{"(ab)^n", ab}, {"(ac)^n", ac}, {"(bc)^n", bc}}) {
    for (std::size_t n = 1; n <= nmax; ++n) {
      claim_word(report, a, name, kv({{"n", n}}), base.pow(n), Expectation::nontrivial, budget);
    }
  }

  auto const ga = w("a"), gb = w("b"), gc = w("c");
  using Family = std::function<GroupWord(std::size_t, std::size_t)>;
  std::array<Family, 8> const families{
      [&](std::size_t k, std::size_t m) { return ab.pow(k) * ac.pow(m); },
      [&](std::size_t k, std::size_t m) { return ab.pow(k) * ca.pow(m); },
      [&](std::size_t k, std::size_t m) { return ab.pow(k) * ac.pow(m) * ga; },
      [&](std::size_t k, std::size_t m) { return ab.pow(k) * ca.pow(m) * gc; },
      [&](std::size_t k, std::size_t m) { return gb * ab.pow(k) * ac.pow(m); },
      [&](std::size_t k, std::size_t m) { return gb * ab.pow(k) * ca.pow(m); },
      [&](std::size_t k, std::size_t m) { return gb * ab.pow(k) * ac.pow(m) * ga; },
      [&](std::size_t k, std::size_t m) { return gb * ab.pow(k) * ca.pow(m) * gc; },
  };

  for (std::size_t f = 0; f < families.size(); ++f) {
    std::string const id = "[" + std::to_string(f + 1) + "]";
    for (std::size_t k = 0; k <= kmax; ++k) {
      for (std::size_t m = 0; m <= kmax; ++m) {
        auto const g = families[f](k, m);
        if (g.empty()) continue;
        claim_word(report, a, id, kv({{"k", k}, {"m", m}}), g, Expectation::nontrivial, budget);
      }
    }
  }

  // Conjugating [5]-[8] by a lands in [1]-[4].
  auto reduced = [&](std::size_t f, std::size_t k, std::size_t m) -> std::pair<std::size_t, GroupWord> {
    switch (f) {
      case 5: return {3, families[2](k + 1, m)};
      case 6: return m == 0 ? std::pair{std::size_t{3}, families[2](k + 1, 0)}
                            : std::pair{std::size_t{4}, families[3](k + 1, m - 1)};
      case 7: return {1, families[0](k + 1, m)};
      default: return {2, families[1](k + 1, m + 1)};
    }
  };
  for (std::size_t f = 5; f <= 8; ++f) {
    for (std::size_t k = 0; k <= kmax; ++k) {
      for (std::size_t m = 0; m <= kmax; ++m) {
        auto [target, image] = reduced(f, k, m);
        auto const conjugate = ga * families[f - 1](k, m) * ga;
        claim_equal(report, a, "[" + std::to_string(f) + "]~[" + std::to_string(target) + "]",
                    kv({{"k", k}, {"m", m}}), conjugate, image, Expectation::equal, budget);
      }
    }
  }
  return report;
}

SuiteReport gab_suite(std::size_t kmax, std::size_t budget) {
  if (kmax < 1) throw Error(ErrorKind::invalid_argument, "kmax must be >= 1");
  auto const a = builtin("gab");
  Words w(a);
  SuiteReport report("gab");
  StateId const b_state = a.id("b");

  claim_word(report, a, "relation", "a^2", w("a^2"), Expectation::trivial, budget);
  claim_word(report, a, "relation", "b^4", w("b^4"), Expectation::trivial, budget);
  claim_word(report, a, "relation", "(ab)^4", w("a*b").pow(4), Expectation::trivial, budget);
  claim_equal(report, a, "b^2=c", "", w("b^2"), w("c"), Expectation::equal, budget);

  for (auto const& [text, expected] :
       {std::pair{"a", std::size_t{2}}, {"b", 4}, {"a*b", 4}, {"c", 2}}) {
    std::string verdict;
    std::string detail;
    try {
      auto order = element_order(a, w(text), 16, budget);
      verdict = order == expected ? "holds" : "fails";
      detail = order ? "order " + std::to_string(*order) : "order > 16";
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::budget_exceeded) throw;
      verdict = "budget-exceeded";
    }
    report.add("order", std::string(text) + "=" + std::to_string(expected),
               Expectation::holds, verdict, detail);
  }

  auto const ga = w("a"), ab = w("a*b"), ab3 = w("a*b^3"), ab2 = w("a*b^2");

  // Every word tested for nontriviality also goes through the root test
  // when its total b-exponent is not a multiple of 4.
  auto nontrivial = [&](std::string id, std::string params, GroupWord const& g) {
    claim_word(report, a, id, params, g, Expectation::nontrivial, budget);
    if (g.exponent_sum(b_state) % 4 != 0) {
      bool const moved = !root_perm(a, g).is_identity();
      report.add("root-perm " + id, std::move(params), Expectation::holds,
                 moved ? "holds" : "fails", "b-exponent " + std::to_string(g.exponent_sum(b_state)));
    }
  };

  for (std::size_t n = 1; n <= 2 * kmax + 2; ++n) nontrivial("[1]", kv({{"n", n}}), ab2.pow(n));
  for (std::size_t n = 0; n <= kmax; ++n) {
    nontrivial("[2]", kv({{"n", n}}), ab2.pow(n) * ga);
    nontrivial("[3]", kv({{"n", n}}), ab2.pow(n) * ab);
    nontrivial("[4]", kv({{"n", n}}), ab2.pow(n) * ab3);
  }

  struct Shape {
    char const* id;
    GroupWord const* middle;
    GroupWord const* tail;
  };
  std::array<Shape, 8> const shapes{{
      {"[5]", &ab, nullptr},
      {"[6]", &ab3, nullptr},
      {"[7]", &ab, &ga},
      {"[8]", &ab3, &ga},
      {"[9]", &ab, &ab},
      {"[10]", &ab3, &ab},
      {"[11]", &ab, &ab3},
      {"[12]", &ab3, &ab3},
  }};
  for (auto const& shape : shapes) {
    for (std::size_t n = 0; n <= kmax; ++n) {
      for (std::size_t m = 0; m <= kmax; ++m) {
        auto g = ab2.pow(n) * *shape.middle * ab2.pow(m);
        if (shape.tail) g *= *shape.tail;
        nontrivial(shape.id, kv({{"n", n}, {"m", m}}), g);
      }
    }
  }

  struct Subcase {
    char const* id;
    std::size_t first_odd;   // exponent of the first (ab^2) block is 2k + first_odd
    GroupWord const* middle;
    std::size_t second_odd;  // exponent of the second block is 2t + second_odd
    GroupWord const* tail;
  };
  std::array<Subcase, 8> const subcases{{
      {"[9.1]", 1, &ab, 0, &ab},
      {"[9.2]", 0, &ab, 1, &ab},
      {"[10.1]", 0, &ab3, 0, &ab},
      {"[10.2]", 1, &ab3, 1, &ab},
      {"[11.1]", 0, &ab, 0, &ab3},
      {"[11.2]", 1, &ab, 1, &ab3},
      {"[12.1]", 1, &ab3, 0, &ab3},
      {"[12.2]", 0, &ab3, 1, &ab3},
  }};
  for (auto const& sc : subcases) {
    for (std::size_t k = 0; k <= kmax; ++k) {
      for (std::size_t t = 0; t <= kmax; ++t) {
        auto const g = ab2.pow(2 * k + sc.first_odd) * *sc.middle *
                       ab2.pow(2 * t + sc.second_odd) * *sc.tail;
        nontrivial(sc.id, kv({{"k", k}, {"t", t}}), g);
      }
    }
  }
  return report;
}

SuiteReport decomposition_replay(std::size_t kmax, std::size_t budget) {
  if (kmax < 1) throw Error(ErrorKind::invalid_argument, "kmax must be >= 1");
  SuiteReport report("decomposition");
  auto const holds = Expectation::holds;

  {
    auto const a = builtin("gabc");
    Words w(a);
    GroupWord const e;
    auto const ac = w("a*c"), ca = w("c*a"), bc = w("b*c");

    claim_decomposition(report, a, "a^2=(a^2,c^2,b^2)", "", w("a^2"),
                        wreath(a, "id", {w("a^2"), w("c^2"), w("b^2")}), holds, budget);
    claim_decomposition(report, a, "b^2=(c^2,a^2,b^2)", "", w("b^2"),
                        wreath(a, "id", {w("c^2"), w("a^2"), w("b^2")}), holds, budget);
    claim_decomposition(report, a, "c^2=(e,e,c^2)", "", w("c^2"),
                        wreath(a, "id", {e, e, w("c^2")}), holds, budget);
    claim_decomposition(report, a, "ab=(ac,ca,b^2)", "", w("a*b"),
                        wreath(a, "id", {ac, ca, w("b^2")}), holds, budget);
    claim_decomposition(report, a, "ab=(ac,ca,e)", "", w("a*b"),
                        wreath(a, "id", {ac, ca, e}), holds, budget);
    claim_decomposition(report, a, "abc=(12)(ac,ca,c)", "", w("a*b*c"),
                        wreath(a, "(12)", {ac, ca, w("c")}), holds, budget);
    claim_decomposition(report, a, "(abc)^2=(acca,acca,c^2)", "", w("a*b*c").pow(2),
                        wreath(a, "id", {ac * ca, ac * ca, w("c^2")}), holds, budget);
    claim_decomposition(report, a, "(abc)^2=(e,e,e)", "", w("a*b*c").pow(2),
                        wreath(a, "id", {e, e, e}), holds, budget);
    claim_decomposition(report, a, "bc=(12)(c,a,bc)", "", bc,
                        wreath(a, "(12)", {w("c"), w("a"), bc}), holds, budget);
    claim_decomposition(report, a, "ac=(12)(a,c,bc)", "", ac,
                        wreath(a, "(12)", {w("a"), w("c"), bc}), holds, budget);
    for (std::size_t n = 1; n <= 2 * kmax; ++n) {
      claim_decomposition(report, a, "(ab)^n=((ac)^n,(ca)^n,e)", kv({{"n", n}}),
                          w("a*b").pow(n), wreath(a, "id", {ac.pow(n), ca.pow(n), e}), holds,
                          budget);
    }
    for (std::size_t k = 0; k <= kmax; ++k) {
      claim_decomposition(report, a, "(bc)^2k=((ca)^k,(ac)^k,(bc)^2k)", kv({{"k", k}}),
                          bc.pow(2 * k),
                          wreath(a, "id", {ca.pow(k), ac.pow(k), bc.pow(2 * k)}), holds, budget);
      claim_decomposition(report, a, "(ac)^2k=((ac)^k,(ca)^k,(bc)^2k)", kv({{"k", k}}),
                          ac.pow(2 * k),
                          wreath(a, "id", {ac.pow(k), ca.pow(k), bc.pow(2 * k)}), holds, budget);
    }

    // Negative controls.
    claim_decomposition(report, a, "control: ab=(ca,ac,b^2)", "", w("a*b"),
                        wreath(a, "id", {ca, ac, w("b^2")}), Expectation::fails, budget);
    claim_decomposition(report, a, "control: abc=id(ac,ca,c)", "", w("a*b*c"),
                        wreath(a, "id", {ac, ca, w("c")}), Expectation::fails, budget);
  }

  {
    auto const a = builtin("gab");
    Words w(a);
    GroupWord const e;
    auto const b2 = w("b^2"), b2a = w("b^2*a"), ab2 = w("a*b^2"), ga = w("a");
    auto const ab = w("a*b"), ab3 = w("a*b^3");

    claim_decomposition(report, a, "a=(b^2,a,b^2,a)", "", ga,
                        wreath(a, "id", {b2, ga, b2, ga}), holds, budget);
    claim_decomposition(report, a, "b^2=(12)(34)(e,a^2,a,a)", "", b2,
                        wreath(a, "(12)(34)", {e, w("a^2"), ga, ga}), holds, budget);
    claim_decomposition(report, a, "ab=(1324)(b^2,e,b^2,e)", "", ab,
                        wreath(a, "(1324)", {b2, e, b2, e}), holds, budget);
    claim_decomposition(report, a, "(ab)^2=(12)(34)(b^4,e,b^2,b^2)", "", ab.pow(2),
                        wreath(a, "(12)(34)", {w("b^4"), e, b2, b2}), holds, budget);
    claim_decomposition(report, a, "(ab)^4=(e,e,b^4,b^4)", "", ab.pow(4),
                        wreath(a, "id", {e, e, w("b^4"), w("b^4")}), holds, budget);
    claim_decomposition(report, a, "ab^2=(12)(34)(b^2,a,b^2a,e)", "", ab2,
                        wreath(a, "(12)(34)", {b2, ga, b2a, e}), holds, budget);
    claim_decomposition(report, a, "(ab^2)^2=(b^2a,ab^2,b^2a,b^2a)", "", ab2.pow(2),
                        wreath(a, "id", {b2a, ab2, b2a, b2a}), holds, budget);

    for (std::size_t k = 0; k <= kmax; ++k) {
      auto const p = b2a.pow(k), q = ab2.pow(k);
      auto const p1 = b2a.pow(k + 1), q1 = ab2.pow(k + 1);
      auto const odd = ab2.pow(2 * k + 1);
      auto const params = kv({{"k", k}});

      claim_decomposition(report, a, "(ab^2)^2k", params, ab2.pow(2 * k),
                          wreath(a, "id", {p, q, p, p}), holds, budget);
      claim_decomposition(report, a, "(ab^2)^(2k+1)", params, odd,
                          wreath(a, "(12)(34)", {p * b2, q * ga, p1, p}), holds, budget);
      claim_decomposition(report, a, "(ab^2)^(2k+1)ab", params, odd * ab,
                          wreath(a, "(1423)", {p * b2, q1, p1, p * b2}), holds, budget);
      claim_decomposition(report, a, "(ab^2)^(2k+1)ab^3", params, odd * ab3,
                          wreath(a, "(1324)", {p1, q1 * ga, p1, p * b2}), holds, budget);
      claim_decomposition(report, a, "(ab^2)^2k ab", params, ab2.pow(2 * k) * ab,
                          wreath(a, "(1324)", {p * b2, q, p * b2, p}), holds, budget);
      claim_decomposition(report, a, "(ab^2)^2k ab^3", params, ab2.pow(2 * k) * ab3,
                          wreath(a, "(1423)", {p1, q * ga, p * b2, p}), holds, budget);
    }

    // One coordinate of each parity subcase, then nontriviality of that
    // coordinate and of the whole word.
    struct Subcase {
      char const* id;
      std::size_t first_odd;
      GroupWord middle;
      std::size_t second_odd;
      GroupWord tail;
      Letter coordinate;
      std::function<GroupWord(std::size_t, std::size_t)> claimed;
    };
    std::vector<Subcase> const subcases{
        {"[9.1]", 1, ab, 0, ab, 3, [&](auto k, auto t) { return b2a.pow(k + t + 1) * b2; }},
        {"[9.2]", 0, ab, 1, ab, 3, [&](auto k, auto t) { return b2a.pow(k) * b2 * ab2.pow(t + 1); }},
        {"[10.1]", 0, ab3, 0, ab, 1, [&](auto k, auto t) { return b2a.pow(k + 1 + t); }},
        {"[10.2]", 1, ab3, 1, ab, 1, [&](auto k, auto t) { return b2a.pow(k + t + 2); }},
        {"[11.1]", 0, ab, 0, ab3, 4, [&](auto k, auto t) { return b2a.pow(k + 1 + t); }},
        {"[11.2]", 1, ab, 1, ab3, 4,
         [&](auto k, auto t) { return b2a.pow(k) * b2 * ab2.pow(t + 1) * ga; }},
        {"[12.1]", 1, ab3, 0, ab3, 1, [&](auto k, auto t) { return b2a.pow(k + t + 1) * b2; }},
        {"[12.2]", 0, ab3, 1, ab3, 1, [&](auto k, auto t) { return b2a.pow(k + t + 1) * b2; }},
    };
    for (auto const& sc : subcases) {
      for (std::size_t k = 0; k <= kmax; ++k) {
        for (std::size_t t = 0; t <= kmax; ++t) {
          auto const g = ab2.pow(2 * k + sc.first_odd) * sc.middle *
                         ab2.pow(2 * t + sc.second_odd) * sc.tail;
          Letter const vertex[] = {sc.coordinate};
          auto const claimed = sc.claimed(k, t);
          auto const params = kv({{"k", k}, {"t", t}});
          std::string const id = std::string(sc.id) + " coord " + std::to_string(sc.coordinate);
          claim_equal(report, a, id, params, restriction(a, g, vertex), claimed,
                      Expectation::equal, budget);
          claim_word(report, a, id + " nontrivial", params, claimed, Expectation::nontrivial,
                     budget);
          claim_word(report, a, std::string(sc.id) + " nontrivial", params, g,
                     Expectation::nontrivial, budget);
        }
      }
    }

    claim_decomposition(report, a, "control: ab=(1423)(b^2,e,b^2,e)", "", ab,
                        wreath(a, "(1423)", {b2, e, b2, e}), Expectation::fails, budget);
    claim_decomposition(report, a, "control: ab^2=(12)(34)(a,b^2,b^2a,e)", "", ab2,
                        wreath(a, "(12)(34)", {ga, b2, b2a, e}), Expectation::fails, budget);
  }
  return report;
}

SuiteReport power_suite(std::span<std::size_t const> levels, std::size_t budget,
                        std::uint64_t seed) {
  if (levels.empty()) throw Error(ErrorKind::invalid_argument, "no power levels given");
  SuiteReport report("power");
  std::mt19937_64 rng(seed);

  for (auto name : builtin_names()) {
    auto const base = builtin(name);
    std::size_t const d = base.degree();
    for (std::size_t L : levels) {
      auto const power = direct_power(base, L, PowerVariant::corrected);
      std::string const prefix = std::string(name) + " L=" + std::to_string(L);

      for (StateId q = 1; q < base.size(); ++q) {
        for (std::size_t j = 1; j <= L; ++j) {
          StateId const lifted = power.id(power_name(base.name(q), j));
          std::string const params = prefix + " " + power.name(lifted);

          // Interleaving property on random stream tuples.
          std::string counterexample;
          for (std::size_t sample = 0; sample < VerifyDefaults::random_samples; ++sample) {
            std::size_t const length = rng() % (VerifyDefaults::max_stream_length + 1);
            std::vector<InputWord> streams(L, InputWord(length));
            for (auto& s : streams) {
              for (auto& x : s) x = static_cast<Letter>(rng() % d + 1);
            }
            auto expected_streams = streams;
            expected_streams[j - 1] = act_state(base, q, streams[j - 1]);
            auto const input = interleave(streams);
            if (act_state(power, lifted, input) != interleave(expected_streams)) {
              counterexample = format_letters(input);
              break;
            }
          }
          report.add("interleave", params, Expectation::holds,
                     counterexample.empty() ? "holds" : "fails",
                     counterexample.empty()
                         ? std::to_string(VerifyDefaults::random_samples) + " samples"
                         : "input " + counterexample);

          // Exhaustive: only positions = j (mod L) may change.
          std::size_t const length = 6;
          InputWord word(length, 1);
          std::string moved;
          while (true) {
            auto const out = act_state(power, lifted, word);
            for (std::size_t p = 0; p < length && moved.empty(); ++p) {
              if (out[p] != word[p] && p % L != j - 1) moved = format_letters(word);
            }
            if (!moved.empty()) break;
            std::size_t i = 0;
            while (i < length && word[i] == d) word[i++] = 1;
            if (i == length) break;
            ++word[i];
          }
          report.add("positions", params, Expectation::holds, moved.empty() ? "holds" : "fails",
                     moved.empty() ? "all words of length 6" : "moves off-level on " + moved);
        }
      }

      report.merge(power_commutation_suite(base, L, budget), std::string(name) + " ");
    }
  }

  // The literal construction breaks the interleaving property on the adding
  // machine already for L = 2.
  {
    auto const base = builtin("adding");
    auto const literal = direct_power(base, 2, PowerVariant::literal);
    InputWord const input{2, 1, 2, 1};
    auto const got = act_state(literal, literal.id("q@1"), input);
    std::vector<InputWord> const expected_streams{act_state(base, base.id("q"), InputWord{2, 2}),
                                                  InputWord{1, 1}};
    auto const expected = interleave(expected_streams);
    report.add("literal property (1)", "adding L=2 input 2121", Expectation::fails,
               got == expected ? "holds" : "fails",
               "got " + format_letters(got) + ", interleaving gives " + format_letters(expected));
    report.add("literal output", "adding L=2 input 2121", Expectation::holds,
               got == InputWord{1, 1, 2, 1} ? "holds" : "fails", format_letters(got));

    auto const x = GroupWord::generator(literal.id("q@1"));
    auto const y = GroupWord::generator(literal.id("q@2"));
    auto const verdict = is_trivial(literal, commutator(x, y), budget);
    report.add("literal commutator", "adding L=2 [q@1,q@2]", Expectation::nontrivial,
               std::string(to_string(verdict.kind)),
               verdict.nontrivial() ? "moves " + format_letters(verdict.witness) : "");
  }
  return report;
}

std::vector<SuiteReport> verify_all(std::size_t budget) {
  std::array<std::size_t, 3> const levels{1, 2, 3};
  std::vector<SuiteReport> reports;
  reports.push_back(gabc_suite(VerifyDefaults::kmax, VerifyDefaults::nmax, budget));
  reports.push_back(gab_suite(VerifyDefaults::kmax, budget));
  reports.push_back(decomposition_replay(VerifyDefaults::decomposition_kmax, budget));
  reports.push_back(power_suite(levels, budget));
  return reports;
}

}  // namespace autgrp
