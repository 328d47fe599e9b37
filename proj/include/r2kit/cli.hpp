#pragma once

namespace r2kit::cli {

// Parses arguments, runs one subcommand and returns the process exit code:
// 0 ok, 1 check failure, 2 config error, 3 numerical error.
int run(int argc, char** argv);

}  // namespace r2kit::cli
