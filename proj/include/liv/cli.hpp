#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liv {

/// Full command-line front end. Returns 0 on success (paper-value
/// discrepancies included), 2 on usage errors (bad flags, malformed or
/// missing input files), 1 on computation errors. All output goes to
/// `out`/`err`, so the tool is embeddable in tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace liv
