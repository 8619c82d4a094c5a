#pragma once

// The `rfa` command-line tool. Kept in the library so tests can drive it
// without spawning processes.

#include <ostream>
#include <string>
#include <vector>

namespace rfa {

/// Exit codes: 0 success/true, 1 property false, 2 usage or parse error,
/// 3 internal failure (e.g. learning cap exceeded).
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rfa
