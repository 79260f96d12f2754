#ifndef AUTGRP_VERIFY_HPP_
#define AUTGRP_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "autgrp/report.hpp"
#include "autgrp/word_problem.hpp"

namespace autgrp {

struct VerifyDefaults {
  static constexpr std::size_t kmax = 6;
  static constexpr std::size_t nmax = 20;
  static constexpr std::size_t decomposition_kmax = 4;
  static constexpr std::uint64_t seed = 20181028;
  static constexpr std::size_t random_samples = 100;
  static constexpr std::size_t max_stream_length = 6;
};

// Relations, power claims and word families [1]-[8] for gabc.
SuiteReport gabc_suite(std::size_t kmax = VerifyDefaults::kmax,
                       std::size_t nmax = VerifyDefaults::nmax,
                       std::size_t budget = kDefaultBudget);

// Relations, b^2 = c, orders, families [1]-[12] and the parity subcases
// [9.1]-[12.2] for gab, plus the root-permutation test for every word whose
// total b-exponent is not divisible by 4.
SuiteReport gab_suite(std::size_t kmax = VerifyDefaults::kmax,
                      std::size_t budget = kDefaultBudget);

// Every displayed wreath identity, swept over 0 <= k, t <= kmax, plus a
// perturbed negative control.
SuiteReport decomposition_replay(
    std::size_t kmax = VerifyDefaults::decomposition_kmax,
    std::size_t budget = kDefaultBudget);

// Interleaving properties and cross-level commutation for every builtin and
// every L in `levels`, plus the pinned counterexample for the literal
// variant.
SuiteReport power_suite(std::span<std::size_t const> levels,
                        std::size_t budget = kDefaultBudget,
                        std::uint64_t seed = VerifyDefaults::seed);

std::vector<SuiteReport> verify_all(std::size_t budget = kDefaultBudget);

}  // namespace autgrp

#endif  // AUTGRP_VERIFY_HPP_
