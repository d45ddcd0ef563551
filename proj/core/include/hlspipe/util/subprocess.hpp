#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlspipe::util {

struct RunResult {
    int exit_code = -1;
    bool timed_out = false;
    bool signaled = false;
    std::string out;
    std::string err;
};

struct SpawnError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runs `argv` as a child process with `stdin_data` on its standard input,
/// capturing stdout/stderr. `cwd`, when non-empty, is the child's working
/// directory. On timeout the child is killed with SIGKILL and `timed_out`
/// is set; partial output is still returned.
RunResult run_process(const std::vector<std::string>& argv,
                      const std::string& stdin_data,
                      int timeout_seconds,
                      const std::filesystem::path& cwd = {});

}  // namespace hlspipe::util
