#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptolemy_lab {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotPtolemy = 1;  // analyze; verify with a failing suite
inline constexpr int kExitUsage = 2;       // parse errors, bad arguments, size limits
inline constexpr int kExitNotClosed = 3;   // mutate performed, result not extension-closed
inline constexpr int kExitNotExtProjective = 4;
inline constexpr int kExitBindFailure = 5;
inline constexpr int kExitInternal = 70;

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptolemy_lab
