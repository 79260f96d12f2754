#include "autgrp/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "autgrp/error.hpp"

namespace autgrp {

GroupWord::GroupWord(std::vector<Generator> letters) : letters_(std::move(letters)) {
  std::erase_if(letters_, [](Generator g) { return g.state == kIdentity; });
}

GroupWord GroupWord::generator(StateId q, int exponent) {
  if (q == kIdentity || exponent == 0) return {};
  std::vector<Generator> letters(static_cast<std::size_t>(std::abs(exponent)),
                                 Generator{q, exponent < 0});
  return GroupWord(std::move(letters));
}

std::vector<Syllable> GroupWord::syllables() const {
  std::vector<Syllable> result;
  for (auto g : letters_) {
    int const step = g.inverse ? -1 : 1;
    if (!result.empty() && result.back().state == g.state &&
        (result.back().exponent > 0) == (step > 0)) {
      result.back().exponent += step;
    } else {
      result.push_back({g.state, step});
    }
  }
  return result;
}

int GroupWord::exponent_sum(StateId q) const {
  int sum = 0;
  for (auto g : letters_) {
    if (g.state == q) sum += g.inverse ? -1 : 1;
  }
  return sum;
}

GroupWord GroupWord::inverse() const {
  GroupWord result;
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    result.letters_.push_back(it->inverted());
  }
  return result;
}

GroupWord GroupWord::pow(std::size_t k) const {
  GroupWord result;
  result.letters_.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) result *= *this;
  return result;
}

GroupWord& GroupWord::operator*=(GroupWord const& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupWord parse_word(std::string_view text, Automaton const& a) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw Error(ErrorKind::syntax, "empty group word");

  GroupWord result;
  std::string_view rest = compact;
  while (true) {
    auto star = rest.find('*');
    auto atom = trim(rest.substr(0, star));
    auto caret = atom.find('^');
    auto name = atom.substr(0, caret);
    if (!is_valid_name(name)) {
      throw Error(ErrorKind::syntax, "malformed atom '" + std::string(atom) + "'");
    }
    int exponent = 1;
    if (caret != std::string_view::npos) {
      auto digits = atom.substr(caret + 1);
      auto const* first = digits.data();
      auto const* last = digits.data() + digits.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (digits.empty() || ec != std::errc{} || ptr != last) {
        throw Error(ErrorKind::syntax, "malformed exponent in '" + std::string(atom) + "'");
      }
      if (exponent == 0) {
        throw Error(ErrorKind::zero_exponent, "zero exponent in '" + std::string(atom) + "'");
      }
    }
    result *= GroupWord::generator(a.id(name), exponent);
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  return result;
}

std::string to_string(GroupWord const& w, Automaton const& a) {
  if (w.empty()) return std::string(kIdentityName);
  std::string out;
  for (auto const& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += a.name(s.state);
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

GroupWord commutator(GroupWord const& x, GroupWord const& y) {
  return x.inverse() * y.inverse() * x * y;
}

}  // namespace autgrp
