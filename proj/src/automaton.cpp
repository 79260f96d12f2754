#include "autgrp/automaton.hpp"

#include <cctype>

#include "autgrp/error.hpp"

namespace autgrp {

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size < 2) {
    throw Error(ErrorKind::alphabet_too_small,
                "alphabet must have at least 2 letters, got " + std::to_string(size));
  }
}

std::string_view to_string(DefectKind kind) {
  switch (kind) {
    case DefectKind::dangling_reference: return "dangling-reference";
    case DefectKind::size_mismatch: return "size-mismatch";
    case DefectKind::arity_mismatch: return "arity-mismatch";
    case DefectKind::reserved_redefinition: return "reserved-redefinition";
    case DefectKind::duplicate_state: return "duplicate-state";
  }
  return "unknown";
}

Automaton::Automaton(Alphabet alphabet, std::vector<StateDef> states)
    : alphabet_(alphabet), states_(std::move(states)) {
  std::size_t const d = degree();
  auto const identity = Permutation::identity(d);

  names_.emplace_back(kIdentityName);
  for (auto const& def : states_) names_.push_back(def.name);

  perms_.assign(names_.size(), identity);
  next_.assign(names_.size() * d, kIdentity);

  for (std::size_t i = 0; i < states_.size(); ++i) {
    auto const& def = states_[i];
    auto const id = static_cast<StateId>(i + 1);

    if (def.name == kIdentityName) {
      defects_.push_back({DefectKind::reserved_redefinition, def.name,
                          "the identity state e cannot be redefined"});
      continue;
    }
    if (find(def.name) != id) {
      defects_.push_back({DefectKind::duplicate_state, def.name,
                          "state defined more than once"});
      continue;
    }

    if (def.rule.perm.degree() != d) {
      defects_.push_back({DefectKind::size_mismatch, def.name,
                          "permutation of degree " +
                              std::to_string(def.rule.perm.degree()) +
                              " in an automaton over " + std::to_string(d) +
                              " letters"});
    } else {
      perms_[id] = def.rule.perm;
    }

    if (def.rule.restrictions.size() != d) {
      defects_.push_back({DefectKind::arity_mismatch, def.name,
                          std::to_string(def.rule.restrictions.size()) +
                              " restrictions, expected " + std::to_string(d)});
    }
    for (std::size_t x = 0; x < def.rule.restrictions.size(); ++x) {
      auto const& ref = def.rule.restrictions[x];
      auto target = find(ref);
      if (!target) {
        defects_.push_back({DefectKind::dangling_reference, def.name,
                            "undefined state '" + ref + "'"});
      } else if (x < d) {
        next_[id * d + x] = *target;
      }
    }
  }

  inverse_perms_.reserve(perms_.size());
  for (auto const& p : perms_) inverse_perms_.push_back(invert(p));
}

void Automaton::require_valid() const {
  if (valid()) return;
  std::string message = "invalid automaton:";
  for (auto const& defect : defects_) {
    message += " [" + std::string(to_string(defect.kind)) + " in '" +
               defect.state + "': " + defect.detail + "]";
  }
  throw Error(ErrorKind::invalid_automaton, message);
}

std::optional<StateId> Automaton::find(std::string_view name) const {
  if (name == kIdentityName) return kIdentity;
  for (std::size_t i = 1; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<StateId>(i);
  }
  return std::nullopt;
}

StateId Automaton::id(std::string_view name) const {
  auto found = find(name);
  if (!found) {
    throw Error(ErrorKind::unknown_state, "unknown state '" + std::string(name) + "'");
  }
  return *found;
}

std::vector<Defect> validate(Automaton const& a) { return a.defects(); }

bool is_valid_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto const head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name.substr(1)) {
    auto const u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '@' && c != '~' && c != '\'') {
      return false;
    }
  }
  return true;
}

}  // namespace autgrp
