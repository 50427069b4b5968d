#pragma once

#include <string>
#include <vector>

namespace homrates {

inline constexpr const char* kToolVersion = "1.0.0";

// Grid specs accepted on the command line: a single value, a comma list, or
// an inclusive arithmetic range "start:stop:step" with step > 0. Throws
// InvalidArgumentError with the offending name in the message.
std::vector<double> parse_value_spec(const std::string& spec, const std::string& name);

// Full command dispatch. Returns the process exit code:
//   0 success, 1 validation failure, 2 bad arguments or an infeasible
//   request, 3 output I/O failure.
int run_cli(int argc, char** argv);

}  // namespace homrates
