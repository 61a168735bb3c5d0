#pragma once

namespace momentkit {

// Full command-line driver. Returns the process exit status:
//   0  run completed and every checked contract held
//   1  run completed but some contract failed
//   2  invalid configuration (unknown subcommand, bad flag, failed precondition)
int run_cli(int argc, const char* const* argv);

} // namespace momentkit
