#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wonderful::cli {

/// Exit statuses of run.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

/// Executes one command line (without the program name).
///
/// Systems are read from --system FILE or from `in`. JSON results, text or SVG drawings
/// go to `out`; domain and JSON faults write {"error":{...}} to `out` and return 1;
/// usage faults write a message to `err` and return 2. Output is deterministic.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wonderful::cli
