#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oracle {

namespace {

autgrp::WreathRule const* rule_of(autgrp::Automaton const& a, std::string const& name) {
  for (auto const& def : a.states()) {
    if (def.name == name) return &def.rule;
  }
  return nullptr;  // `e`
}

}  // namespace

InputWord increment(InputWord const& w) {
  unsigned long long value = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 2) value |= 1ULL << i;
  }
  value = (value + 1) & ((1ULL << w.size()) - 1);
  InputWord out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = ((value >> i) & 1) ? 2 : 1;
  return out;
}

InputWord act_generator(autgrp::Automaton const& a, autgrp::Generator g, InputWord w) {
  std::string state = a.name(g.state);
  for (auto& x : w) {
    auto const* rule = rule_of(a, state);
    if (!rule) break;
    if (!g.inverse) {
      Letter const y = rule->perm(x);
      state = rule->restrictions[x - 1];
      x = y;
    } else {
      Letter pre = 0;
      for (Letter z = 1; z <= a.degree(); ++z) {
        if (rule->perm(z) == x) pre = z;
      }
      if (pre == 0) throw std::logic_error("not a permutation");
      state = rule->restrictions[pre - 1];
      x = pre;
    }
  }
  return w;
}

InputWord act_word(autgrp::Automaton const& a, autgrp::GroupWord const& g, InputWord w) {
  for (auto gen : g.letters()) w = act_generator(a, gen, std::move(w));
  return w;
}

void for_each_word(std::size_t d, std::size_t length,
                   std::function<void(InputWord const&)> const& visit) {
  InputWord w(length, 1);
  while (true) {
    visit(w);
    std::size_t i = 0;
    while (i < length && w[i] == d) w[i++] = 1;
    if (i == length) return;
    ++w[i];
  }
}

bool fixes_all(autgrp::Automaton const& a, autgrp::GroupWord const& g, std::size_t depth) {
  bool fixed = true;
  for_each_word(a.degree(), depth, [&](InputWord const& w) {
    if (fixed && act_word(a, g, w) != w) fixed = false;
  });
  return fixed;
}

InputWord interleave_positional(std::vector<InputWord> const& streams) {
  std::size_t const L = streams.size();
  std::size_t const total = L * streams.front().size();
  InputWord out(total);
  for (std::size_t p = 1; p <= total; ++p) {
    std::size_t const stream = (p - 1) % L + 1;
    std::size_t const index = (p + L - 1) / L;
    out[p - 1] = streams[stream - 1][index - 1];
  }
  return out;
}

std::vector<autgrp::GroupWord> all_words(autgrp::Automaton const& a, std::size_t max_length) {
  std::vector<autgrp::Generator> gens;
  for (autgrp::StateId q = 1; q < a.size(); ++q) {
    gens.push_back({q, false});
    gens.push_back({q, true});
  }
  std::vector<autgrp::GroupWord> result{autgrp::GroupWord{}};
  std::vector<std::vector<autgrp::Generator>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<autgrp::Generator>> next;
    for (auto const& prefix : layer) {
      for (auto g : gens) {
        auto w = prefix;
        w.push_back(g);
        result.emplace_back(w);
        next.push_back(std::move(w));
      }
    }
    layer = std::move(next);
  }
  return result;
}

autgrp::Automaton random_automaton(std::mt19937_64& rng, std::size_t max_d,
                                   std::size_t max_states) {
  std::size_t const d = 2 + rng() % (max_d - 1);
  std::size_t const n = 1 + rng() % max_states;
  static char const* const pool[] = {"a", "b", "c", "x1", "q_2", "s@3", "t~", "u'", "Long_Name"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(pool[i]);

  std::vector<autgrp::StateDef> states;
  for (auto const& name : names) {
    std::vector<Letter> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = static_cast<Letter>(i + 1);
    std::shuffle(images.begin(), images.end(), rng);
    autgrp::WreathRule rule{autgrp::Permutation::from_images(images), {}};
    for (std::size_t x = 0; x < d; ++x) {
      std::size_t const pick = rng() % (n + 1);
      rule.restrictions.push_back(pick == n ? "e" : names[pick]);
    }
    states.push_back({name, std::move(rule)});
  }
  return autgrp::Automaton(autgrp::Alphabet(d), std::move(states));
}

}  // namespace oracle
