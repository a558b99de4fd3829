#pragma once

namespace swg {

// Full command-line surface; returns the process exit code:
// 0 success, 1 usage error, 2 a verification run found a violation,
// 3 internal assertion failure.
int cli_main(int argc, char** argv);

}  // namespace swg
