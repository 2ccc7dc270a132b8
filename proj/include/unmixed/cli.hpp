#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unmixed {

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one tool invocation given argv-style arguments (program name
// excluded). Reports go to out, diagnostics to err. Returns the process
// exit code: 0 when the checked property holds (or the command simply
// succeeded), 1 when the property fails, 2 on parse, hypothesis or budget
// errors. In-process so tests can drive the full CLI without spawning.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unmixed
