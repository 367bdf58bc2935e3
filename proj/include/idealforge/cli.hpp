#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idealforge::cli {

/// Runs one CLI invocation. Writes a JSON report to out and diagnostics to
/// err. Exit codes: 0 all checks passed, 1 at least one property failed
/// (a counterexample is in the report), 2 invalid input or arguments.
/// The environment variable IDEALFORGE_SEED overrides any --seed flag.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idealforge::cli
