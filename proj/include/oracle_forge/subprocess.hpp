#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace oracle_forge {

struct ProcessResult {
    int exitCode = -1;  // -1 when killed by a signal or timed out
    std::string stdoutText;
    std::string stderrText;
    bool timedOut = false;
};

/// Runs argv[0] (searched on PATH) and captures both output streams.
/// Throws std::system_error when the process cannot be started.
ProcessResult runProcess(const std::vector<std::string>& argv,
                         std::chrono::milliseconds timeout = std::chrono::seconds(60));

/// Absolute path of an executable file, or empty when `name` is not found.
/// Names containing '/' are checked as given.
std::string findExecutable(const std::string& name);

}  // namespace oracle_forge
