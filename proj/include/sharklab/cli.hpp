#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sharklab::cli {

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResourceExceeded = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sharklab::cli
