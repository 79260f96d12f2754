#ifndef AUTGRP_ERROR_HPP_
#define AUTGRP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace autgrp {

enum class ErrorKind {
  syntax,
  letter_out_of_range,
  repeated_letter,
  size_mismatch,
  length_mismatch,
  unknown_state,
  zero_exponent,
  alphabet_too_small,
  reserved_name,
  duplicate_state,
  arity_mismatch,
  invalid_automaton,
  invalid_argument,
  budget_exceeded,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. `line` is 1-based and only set by the
// DSL parser; 0 means "not tied to a source line".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message, std::size_t line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace autgrp

#endif  // AUTGRP_ERROR_HPP_
