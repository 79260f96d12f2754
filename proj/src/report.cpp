#include "autgrp/report.hpp"

#include <algorithm>
#include <iomanip>

#include "json.hpp"

namespace autgrp {

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::trivial: return "trivial";
    case Expectation::nontrivial: return "nontrivial";
    case Expectation::equal: return "equal";
    case Expectation::not_equal: return "not-equal";
    case Expectation::holds: return "holds";
    case Expectation::fails: return "fails";
  }
  return "unknown";
}

void SuiteReport::add(std::string id, std::string params, Expectation expected,
                      std::string verdict, std::string witness) {
  bool const passed = verdict == to_string(expected);
  claims_.push_back({std::move(id), std::move(params), expected, std::move(verdict),
                     passed, std::move(witness)});
}

void SuiteReport::merge(SuiteReport const& other, std::string_view prefix) {
  for (auto claim : other.claims()) {
    claim.id = std::string(prefix) + claim.id;
    claims_.push_back(std::move(claim));
  }
}

bool SuiteReport::passed() const noexcept { return failures() == 0; }

std::size_t SuiteReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(claims_.begin(), claims_.end(), [](Claim const& c) { return !c.passed; }));
}

void print_table(std::ostream& os, SuiteReport const& report) {
  std::size_t id_width = 5;
  std::size_t params_width = 6;
  for (auto const& c : report.claims()) {
    id_width = std::max(id_width, c.id.size());
    params_width = std::max(params_width, c.params.size());
  }

  os << "== " << report.name() << " ==\n";
  os << std::left << std::setw(static_cast<int>(id_width)) << "claim" << "  "
     << std::setw(static_cast<int>(params_width)) << "params" << "  "
     << std::setw(15) << "expected" << "  " << std::setw(15) << "verdict" << "  "
     << "ok    witness\n";
  for (auto const& c : report.claims()) {
    os << std::left << std::setw(static_cast<int>(id_width)) << c.id << "  "
       << std::setw(static_cast<int>(params_width)) << c.params << "  "
       << std::setw(15) << to_string(c.expected) << "  " << std::setw(15) << c.verdict
       << "  " << (c.passed ? "pass  " : "FAIL  ") << c.witness << '\n';
  }
  os << report.name() << ": " << (report.claims().size() - report.failures()) << "/"
     << report.claims().size() << " claims passed, "
     << (report.passed() ? "PASS" : "FAIL") << '\n';
}

void print_records(std::ostream& os, SuiteReport const& report) {
  for (auto const& c : report.claims()) {
    nlohmann::ordered_json record;
    record["suite"] = report.name();
    record["claim"] = c.id;
    record["params"] = c.params;
    record["verdict"] = c.verdict;
    record["expected"] = to_string(c.expected);
    record["witness"] = c.witness;
    os << record.dump() << '\n';
  }
}

}  // namespace autgrp
