#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdbb::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes shared with scripts:
//   0 success, 2 input parse error, 3 degenerate torus, 4 ideal not
//   zero-dimensional, 5 table diff failure, 6 exactness downgraded on
//   budget exhaustion (partial results still emitted).
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitNotZeroDim = 4;
inline constexpr int kExitTableDiff = 5;
inline constexpr int kExitBudget = 6;

// Runs one command. argv excludes the program name. The machine-readable
// mode writes exactly one JSON envelope to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace sdbb::cli
