#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chroma {

/// Runs one CLI command. Exit codes: 0 success, 1 validation or law failure,
/// 2 parse error (file or command line), 3 guard exceeded.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chroma
