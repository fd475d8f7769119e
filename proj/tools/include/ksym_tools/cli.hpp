#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksym::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;

// Runs one command. `args` excludes the program name. The JSON result or
// error document goes to `out`; usage text and CLI diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ksym::cli
