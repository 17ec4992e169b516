#ifndef SHOCKFRONT_CLI_HPP
#define SHOCKFRONT_CLI_HPP

#include <string>
#include <vector>

namespace shockfront::cli {

inline constexpr const char* kVersion = "shockfront-0.1.0";

// Exit codes: 0 success, 2 invalid arguments, 3 domain error, 4 unwritable output.
int run(const std::vector<std::string>& args);

}  // namespace shockfront::cli

#endif
