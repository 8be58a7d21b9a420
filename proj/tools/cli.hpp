#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pog::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInfeasible = 2;
inline constexpr int kDiagnostic = 3;

/// Runs one verb. `args` excludes the program name. JSON results go to `out`
/// (or --out), human summaries to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pog::cli
