#ifndef AUTGRP_REPORT_HPP_
#define AUTGRP_REPORT_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace autgrp {

// What a claim is expected to come out as. `holds`/`fails` cover claims
// that are not word-problem verdicts, e.g. a decomposition identity or a
// negative control.
enum class Expectation { trivial, nontrivial, equal, not_equal, holds, fails };

std::string_view to_string(Expectation e);

struct Claim {
  std::string id;
  std::string params;
  Expectation expected;
  std::string verdict;  // same vocabulary as Expectation, or "budget-exceeded"
  bool passed = false;
  std::string witness;  // witness word or a short proof summary
};

class SuiteReport {
 public:
  explicit SuiteReport(std::string name) : name_(std::move(name)) {}

  std::string const& name() const noexcept { return name_; }
  std::vector<Claim> const& claims() const noexcept { return claims_; }

  // Records a claim; `passed` is derived from verdict == to_string(expected).
  void add(std::string id, std::string params, Expectation expected,
           std::string verdict, std::string witness = {});

  // Appends another report's claims, prefixing their ids with `prefix`.
  void merge(SuiteReport const& other, std::string_view prefix = {});

  bool passed() const noexcept;
  std::size_t failures() const noexcept;

 private:
  std::string name_;
  std::vector<Claim> claims_;
};

// Human-readable table.
void print_table(std::ostream& os, SuiteReport const& report);

// One JSON object per line: suite, claim, params, verdict, expected, witness.
void print_records(std::ostream& os, SuiteReport const& report);

}  // namespace autgrp

#endif  // AUTGRP_REPORT_HPP_
