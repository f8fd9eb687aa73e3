#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace polycat::cli {

inline constexpr std::uint64_t default_seed = 1;

enum ExitCode : int { Holds = 0, Fails = 1, InputError = 2 };

// args excludes the program name. The report goes to out, errors to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycat::cli
