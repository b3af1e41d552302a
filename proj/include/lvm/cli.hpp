#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lvm::cli {

/// Process exit codes of the `lvm` tool.
enum ExitCode : int {
    ok = 0,
    refuted = 1,           // a requested check evaluated to false
    usage = 2,             // bad flags, or a selector that does not fit the input
    quadruple_absent = 3,  // witness pipeline found no quadruple; not a software failure
    resource_guard = 4,    // search budget or enumeration cap exhausted
    input_error = 5,       // unreadable/malformed file, unwritable output, violated precondition
};

/// Runs the tool with args (without the program name). Primary artifacts go
/// to --out or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lvm::cli
