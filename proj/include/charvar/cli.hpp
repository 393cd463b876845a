#pragma once

#include <ostream>

namespace charvar {

/// Entry point of the command-line tool. Reports go to `out` (or the --out
/// file), diagnostics and timing to `err`. Returns 0 when every check passes,
/// 1 on a verification failure and 2 on bad parameters or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charvar
