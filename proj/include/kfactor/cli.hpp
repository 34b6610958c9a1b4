#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kfactor {

/// Command-line entry point (the `main` in tools/ forwards here so tests can
/// drive the CLI in-process). Returns 0 on success, 1 when a checked
/// property fails (a theorem contradiction or nonzero sweep contradictions),
/// 2 on usage or input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfactor
