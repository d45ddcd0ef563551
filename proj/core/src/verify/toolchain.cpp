#include "hlspipe/verify.hpp"

#include <fstream>

#include "hlspipe/util/subprocess.hpp"

namespace hlspipe::verify {

BuildResult build(const std::vector<SourceFile>& sources, const ToolchainConfig& toolchain,
                  const std::filesystem::path& workdir) {
    namespace fs = std::filesystem;
    fs::create_directories(workdir);

    std::vector<std::string> c_files;
    for (const auto& src : sources) {
        fs::path p = workdir / src.name;
        std::ofstream out(p, std::ios::binary);
        out << src.text;
        if (!out) throw std::runtime_error("cannot write " + p.string());
        if (p.extension() == ".c") c_files.push_back(src.name);
    }

    fs::path binary = workdir / "a.out";
    std::vector<std::string> argv;
    for (const auto& part : toolchain.compiler_command) {
        if (part == "{sources}") {
            argv.insert(argv.end(), c_files.begin(), c_files.end());
        } else if (part == "{output}") {
            argv.push_back(binary.string());
        } else {
            argv.push_back(part);
        }
    }
    argv.insert(argv.end(), toolchain.extra_flags.begin(), toolchain.extra_flags.end());

    util::RunResult rr =
        util::run_process(argv, "", toolchain.timeout_seconds, workdir);
    if (rr.timed_out) throw BuildTimeout();
    if (rr.exit_code == 127) throw CompilerNotFound(argv.empty() ? "" : argv[0]);

    BuildResult res;
    res.stderr_text = rr.err;
    if (rr.exit_code == 0) {
        res.status = BuildResult::Status::Success;
        res.binary = binary;
    } else {
        res.status = BuildResult::Status::CompileFailed;
    }
    return res;
}

}  // namespace hlspipe::verify
