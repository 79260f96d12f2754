#ifndef AUTGRP_TOOLS_CLI_HPP_
#define AUTGRP_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace autgrp::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kClaimFailed = 1;  // also: nontrivial / not equal
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

// Runs one command line (without the program name). Never throws.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace autgrp::cli

#endif  // AUTGRP_TOOLS_CLI_HPP_
