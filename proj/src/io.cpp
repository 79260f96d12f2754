#include "autgrp/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "autgrp/error.hpp"

namespace autgrp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with_keyword(std::string_view line, std::string_view keyword) {
  return line.size() > keyword.size() && line.substr(0, keyword.size()) == keyword &&
         std::isspace(static_cast<unsigned char>(line[keyword.size()]));
}

std::size_t parse_alphabet(std::string_view rest, std::size_t line) {
  rest = trim(rest);
  if (rest.empty()) throw Error(ErrorKind::syntax, "missing alphabet size", line);
  std::size_t d = 0;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::syntax, "alphabet size must be a positive integer", line);
    }
    d = d * 10 + static_cast<std::size_t>(c - '0');
    if (d > 1'000'000) throw Error(ErrorKind::syntax, "alphabet size too large", line);
  }
  if (d < 2) {
    throw Error(ErrorKind::alphabet_too_small,
                "alphabet must have at least 2 letters, got " + std::string(rest), line);
  }
  return d;
}

StateDef parse_state(std::string_view rest, std::size_t d, std::size_t line) {
  auto eq = rest.find('=');
  if (eq == std::string_view::npos) throw Error(ErrorKind::syntax, "expected '='", line);
  auto name = trim(rest.substr(0, eq));
  if (!is_valid_name(name)) {
    throw Error(ErrorKind::syntax, "invalid state name '" + std::string(name) + "'", line);
  }
  if (name == kIdentityName) {
    throw Error(ErrorKind::reserved_name, "the identity state e is reserved", line);
  }

  auto body = trim(rest.substr(eq + 1));
  auto open = body.rfind('(');
  if (open == std::string_view::npos || body.back() != ')') {
    throw Error(ErrorKind::syntax, "expected restriction list '(r1, ..., rd)'", line);
  }
  auto perm_text = trim(body.substr(0, open));
  if (perm_text.empty()) throw Error(ErrorKind::syntax, "missing permutation", line);
  auto refs_text = body.substr(open + 1, body.size() - open - 2);

  StateDef def;
  def.name = std::string(name);
  try {
    def.rule.perm = parse_permutation(perm_text, d);
  } catch (Error const& e) {
    throw Error(e.kind(), e.what(), line);
  }

  std::size_t start = 0;
  while (true) {
    auto comma = refs_text.find(',', start);
    auto ref = trim(refs_text.substr(start, comma - start));
    if (!is_valid_name(ref)) {
      throw Error(ErrorKind::syntax, "invalid restriction '" + std::string(ref) + "'", line);
    }
    def.rule.restrictions.emplace_back(ref);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (def.rule.restrictions.size() != d) {
    throw Error(ErrorKind::arity_mismatch,
                std::to_string(def.rule.restrictions.size()) +
                    " restrictions, expected " + std::to_string(d),
                line);
  }
  return def;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<StateDef> states;
  std::vector<std::size_t> lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!degree) {
      if (!starts_with_keyword(line, "alphabet")) {
        throw Error(ErrorKind::syntax, "expected 'alphabet <d>' first", line_no);
      }
      degree = parse_alphabet(line.substr(8), line_no);
      continue;
    }
    if (starts_with_keyword(line, "alphabet")) {
      throw Error(ErrorKind::syntax, "alphabet declared twice", line_no);
    }
    if (!starts_with_keyword(line, "state")) {
      throw Error(ErrorKind::syntax, "expected 'state <name> = ...'", line_no);
    }
    auto def = parse_state(line.substr(5), *degree, line_no);
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].name == def.name) {
        throw Error(ErrorKind::duplicate_state,
                    "state '" + def.name + "' already defined on line " +
                        std::to_string(lines[i]),
                    line_no);
      }
    }
    states.push_back(std::move(def));
    lines.push_back(line_no);
  }
  if (!degree) throw Error(ErrorKind::syntax, "missing 'alphabet <d>' line", line_no);

  Automaton result(Alphabet(*degree), std::move(states));
  if (!result.valid()) {
    auto const& defect = result.defects().front();
    std::size_t where = line_no;
    for (std::size_t i = 0; i < result.states().size(); ++i) {
      if (result.states()[i].name == defect.state) {
        where = lines[i];
        break;
      }
    }
    std::string message = std::string(to_string(defect.kind)) + " in state '" +
                          defect.state + "': " + defect.detail;
    if (result.defects().size() > 1) {
      message += " (and " + std::to_string(result.defects().size() - 1) + " more)";
    }
    throw Error(ErrorKind::invalid_automaton, message, where);
  }
  return result;
}

std::string print_automaton(Automaton const& a) {
  std::string out = "alphabet " + std::to_string(a.degree()) + "\n";
  for (auto const& def : a.states()) {
    out += "state " + def.name + " = " + to_string(def.rule.perm) + " (";
    for (std::size_t i = 0; i < def.rule.restrictions.size(); ++i) {
      if (i > 0) out += ", ";
      out += def.rule.restrictions[i];
    }
    out += ")\n";
  }
  return out;
}

std::string export_dot(Automaton const& a) {
  a.require_valid();
  std::size_t const d = a.degree();

  bool identity_used = a.states().empty();
  for (auto const& def : a.states()) {
    for (auto const& ref : def.rule.restrictions) identity_used |= ref == kIdentityName;
  }

  std::vector<StateId> nodes;
  for (StateId q = 1; q < a.size(); ++q) nodes.push_back(q);
  if (identity_used) nodes.push_back(kIdentity);

  std::ostringstream os;
  os << "digraph automaton {\n";
  for (StateId q : nodes) os << "  \"" << a.name(q) << "\";\n";
  for (StateId q : nodes) {
    for (Letter x = 1; x <= d; ++x) {
      os << "  \"" << a.name(q) << "\" -> \"" << a.name(a.next(q, x))
         << "\" [label=\"" << x << '|' << a.perm(q)(x) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace autgrp
