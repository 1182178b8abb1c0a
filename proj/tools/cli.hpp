#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trc::cli {

enum ExitStatus : int {
    exit_ok = 0,
    exit_claim_failure = 1,
    exit_input_error = 2,
    exit_resource_cap = 3,
};

/// Runs the command line `args` (without the program name) against the given
/// streams and returns the process exit status.
///
///   compute (--family DSL | --graph6 PATH|- | --edges PATH) [--mode search|oracle|bounds]
///           [--max-n K] [--witness | --no-witness]
///   verify  [--suite NAME] [--max-n K] [--format json|csv|markdown] [--timings]
///   family  DSL...
auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

} // namespace trc::cli
