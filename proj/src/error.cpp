#include "autgrp/error.hpp"

namespace autgrp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::letter_out_of_range: return "letter-out-of-range";
    case ErrorKind::repeated_letter: return "repeated-letter";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::length_mismatch: return "length-mismatch";
    case ErrorKind::unknown_state: return "unknown-state";
    case ErrorKind::zero_exponent: return "zero-exponent";
    case ErrorKind::alphabet_too_small: return "alphabet-too-small";
    case ErrorKind::reserved_name: return "reserved-name";
    case ErrorKind::duplicate_state: return "duplicate-state";
    case ErrorKind::arity_mismatch: return "arity-mismatch";
    case ErrorKind::invalid_automaton: return "invalid-automaton";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, std::string const& message, std::size_t line)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " + message),
      kind_(kind),
      line_(line) {}

}  // namespace autgrp
