#pragma once

// Command dispatch behind the `akh` binary, separated for testability: the
// full argv -> (exit code, stdout, stderr) map with no process-global state
// beyond the two environment variables (AKH_MAX_CROSSINGS, AKH_CACHE_DIR).

#include <string>
#include <vector>

namespace akh {

struct CliResult {
    int code = 0;       // 0 ok, 1 input error, 2 internal invariant, 3 size limit
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace akh
