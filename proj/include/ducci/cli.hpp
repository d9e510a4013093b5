#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ducci::cli {

/// Dispatches the subcommands {step, orbit, cycle, coeff, pred, formula,
/// graph, sweep, verify}. args excludes the program name. Returns 0 on
/// success, 1 on domain errors, 2 on usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ducci::cli
