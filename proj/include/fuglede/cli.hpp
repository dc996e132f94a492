#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fuglede {

/// Runs one `fuglede` command. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`. Returns the process exit status:
/// 0 pass, 1 fail, 2 inconclusive, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fuglede
