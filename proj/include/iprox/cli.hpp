#pragma once

namespace iprox {

// Exit codes of the iprox tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotConverged = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitProblemFault = 3;

int run_cli(int argc, const char* const* argv);

}  // namespace iprox
