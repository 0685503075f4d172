#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faceflip {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). "-" as a file name
/// means `in` for inputs and `out` for outputs.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace faceflip
