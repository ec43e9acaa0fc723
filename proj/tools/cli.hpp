#ifndef DEEPHOLE_TOOLS_CLI_HPP
#define DEEPHOLE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace deephole::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
    kBudgetExceeded = 3,
};

// Environment variable consulted when --budget is absent.
inline constexpr const char* kBudgetEnv = "DEEPHOLE_BUDGET";

// args excludes the program name. Output goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Drops the volatile header (JSON "header" member or the leading "# header:"
// CSV line) and returns what remains.
std::string payload_of(const std::string& output);

}  // namespace deephole::cli

#endif
