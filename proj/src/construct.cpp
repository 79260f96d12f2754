#include "autgrp/construct.hpp"

#include <array>
#include <utility>

#include "autgrp/error.hpp"
#include "autgrp/io.hpp"

namespace autgrp {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kBuiltins{{
    {"adding",
     "alphabet 2\n"
     "state q = (12) (e, q)\n"},
    {"gabc",
     "alphabet 3\n"
     "state a = id (a, c, b)\n"
     "state b = id (c, a, b)\n"
     "state c = (12) (e, e, c)\n"},
    {"gab",
     "alphabet 4\n"
     "state a = id (c, a, c, a)\n"
     "state b = (1324) (e, a, e, a)\n"
     "state c = (12)(34) (e, e, a, a)\n"},
}};

}  // namespace

std::string_view builtin_source(std::string_view name) {
  for (auto const& [key, source] : kBuiltins) {
    if (key == name) return source;
  }
  throw Error(ErrorKind::invalid_argument,
              "unknown builtin '" + std::string(name) + "' (expected adding, gabc or gab)");
}

Automaton builtin(std::string_view name) { return parse_automaton(builtin_source(name)); }

std::vector<std::string_view> builtin_names() {
  std::vector<std::string_view> names;
  for (auto const& entry : kBuiltins) names.push_back(entry.first);
  return names;
}

std::string inverse_name(std::string_view name) {
  if (name == kIdentityName) return std::string(kIdentityName);
  return std::string(name) + "~";
}

Automaton inverse_automaton(Automaton const& a) {
  a.require_valid();
  std::vector<StateDef> states;
  states.reserve(a.states().size());
  for (StateId q = 1; q < a.size(); ++q) {
    auto const& sigma_inv = a.inverse_perm(q);
    WreathRule rule{sigma_inv, {}};
    for (Letter x = 1; x <= a.degree(); ++x) {
      rule.restrictions.push_back(inverse_name(a.name(a.next(q, sigma_inv(x)))));
    }
    states.push_back({inverse_name(a.name(q)), std::move(rule)});
  }
  return Automaton(a.alphabet(), std::move(states));
}

InputWord interleave(std::span<InputWord const> streams) {
  if (streams.empty()) throw Error(ErrorKind::invalid_argument, "no streams to interleave");
  std::size_t const length = streams.front().size();
  for (auto const& s : streams) {
    if (s.size() != length) {
      throw Error(ErrorKind::length_mismatch, "streams must have equal length");
    }
  }
  InputWord out;
  out.reserve(length * streams.size());
  for (std::size_t i = 0; i < length; ++i) {
    for (auto const& s : streams) out.push_back(s[i]);
  }
  return out;
}

std::vector<InputWord> deinterleave(std::span<Letter const> word, std::size_t streams) {
  if (streams == 0) throw Error(ErrorKind::invalid_argument, "stream count must be positive");
  if (word.size() % streams != 0) {
    throw Error(ErrorKind::length_mismatch,
                "word length " + std::to_string(word.size()) + " is not a multiple of " +
                    std::to_string(streams));
  }
  std::vector<InputWord> out(streams);
  for (std::size_t p = 0; p < word.size(); ++p) out[p % streams].push_back(word[p]);
  return out;
}

PowerVariant parse_power_variant(std::string_view text) {
  if (text == "corrected") return PowerVariant::corrected;
  if (text == "paper-literal" || text == "literal") return PowerVariant::literal;
  throw Error(ErrorKind::invalid_argument,
              "unknown variant '" + std::string(text) + "' (expected corrected or paper-literal)");
}

std::string_view to_string(PowerVariant v) {
  return v == PowerVariant::corrected ? "corrected" : "paper-literal";
}

std::string power_name(std::string_view state, std::size_t level) {
  if (state == kIdentityName && level == 1) return std::string(kIdentityName);
  return std::string(state) + "@" + std::to_string(level);
}

Automaton direct_power(Automaton const& a, std::size_t levels, PowerVariant variant) {
  a.require_valid();
  if (levels < 1) throw Error(ErrorKind::invalid_argument, "power must be at least 1");
  std::size_t const d = a.degree();
  std::size_t const n = a.size();

  auto constant = [&](std::string target) {
    return WreathRule{Permutation::identity(d), std::vector<std::string>(d, target)};
  };

  auto rule_for = [&](StateId q, std::size_t j) {
    WreathRule rule;
    if (variant == PowerVariant::corrected) {
      // Level 1 carries the permutation and jumps to level L; deeper
      // levels count down towards level 1 without touching the letter.
      if (j > 1) return constant(power_name(a.name(q), j - 1));
      rule.perm = a.perm(q);
      for (Letter x = 1; x <= d; ++x) {
        rule.restrictions.push_back(power_name(a.name(a.next(q, x)), levels));
      }
      return rule;
    }
    std::size_t const target_level = j == levels ? 1 : j + 1;
    rule.perm = j == 1 ? a.perm(q) : Permutation::identity(d);
    for (Letter x = 1; x <= d; ++x) {
      rule.restrictions.push_back(power_name(a.name(a.next(q, x)), target_level));
    }
    return rule;
  };

  std::vector<StateDef> states;
  for (std::size_t j = 1; j <= levels; ++j) {
    for (StateId q = 1; q < n; ++q) {
      states.push_back({power_name(a.name(q), j), rule_for(q, j)});
    }
    if (j > 1) states.push_back({power_name(kIdentityName, j), rule_for(kIdentity, j)});
  }
  return Automaton(a.alphabet(), std::move(states));
}

SuiteReport power_commutation_suite(Automaton const& a, std::size_t levels,
                                    std::size_t budget) {
  auto const power = direct_power(a, levels, PowerVariant::corrected);
  SuiteReport report("power-commutation");

  auto verdict_text = [](TrivialityVerdict const& v) { return std::string(to_string(v.kind)); };

  for (std::size_t j = 1; j <= levels; ++j) {
    for (std::size_t k = j; k <= levels; ++k) {
      for (StateId p = 1; p < a.size(); ++p) {
        for (StateId q = 1; q < a.size(); ++q) {
          if (j == k && q <= p) continue;
          auto const x = GroupWord::generator(power.id(power_name(a.name(p), j)));
          auto const y = GroupWord::generator(power.id(power_name(a.name(q), k)));
          auto const verdict = is_trivial(power, commutator(x, y), budget);
          std::string params = "L=" + std::to_string(levels) + " [" +
                               power_name(a.name(p), j) + "," + power_name(a.name(q), k) + "]";
          std::string witness = verdict.nontrivial() ? format_letters(verdict.witness) : "";

          if (j != k) {
            report.add("cross-level", std::move(params), Expectation::trivial,
                       verdict_text(verdict), std::move(witness));
          } else {
            auto const base = is_trivial(
                a, commutator(GroupWord::generator(p), GroupWord::generator(q)), budget);
            auto expected = base.trivial() ? Expectation::trivial : Expectation::nontrivial;
            if (base.exceeded()) {
              report.add("same-level", std::move(params), expected, verdict_text(base));
              continue;
            }
            report.add("same-level", std::move(params), expected, verdict_text(verdict),
                       std::move(witness));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace autgrp
