#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cmweil/arith.hpp"

namespace cmweil::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kPrecondition = 2,
  kMaxIters = 3,
  kBudget = 4,
  kParse = 5,
  kNotFound = 6,
};

/// Decimal, or 2^e, 2^e+c, 2^e-c.
Integer parse_integer_expr(const std::string& text);
/// Comma-separated prime powers, e.g. `2^2,3,5^3`.
Factorization parse_factorization(const std::string& text);

/// Runs one command. `args` excludes the program name. Nothing is written to
/// `out` when the command fails before producing a record.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmweil::cli
