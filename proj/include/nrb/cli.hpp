#pragma once

namespace nrb {

/// Full command-line front end. Returns the process exit code:
/// 0 success / all checks passed, 1 verification or reproduction failure,
/// 2 usage, parse, or input error.
int run_cli(int argc, const char* const* argv);

}  // namespace nrb
