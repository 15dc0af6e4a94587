#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symfix {

inline constexpr const char* tool_version = "0.1.0";

/// The whole command surface, wired to explicit streams so tests can drive
/// it end to end. args excludes the program name. Exit codes: 0 success,
/// 1 input or usage error, 2 resource cap exceeded, 3 survey found a
/// counterexample.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace symfix
