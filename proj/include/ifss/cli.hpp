#pragma once

#include <ostream>
#include <span>
#include <string>

namespace ifss {

/// Runs the command-line interface on `args` (program name excluded).
/// Returns 0 on success, 1 on domain, file, or document errors, and 2 on
/// usage errors. Diagnostics go to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ifss
