// Command-line entry point, factored out of main() so tests can drive it
// in-process. Exit codes: 0 success, 2 bad arguments/config, 3 I/O failure,
// 4 numerical failure.

#pragma once

namespace qsl {

int cli_main(int argc, const char* const* argv);

}  // namespace qsl
