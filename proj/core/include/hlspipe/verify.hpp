#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlspipe/csrc.hpp"

namespace hlspipe::verify {

// ---------------------------------------------------------------------------
// KAT suites

enum class Direction { In, Out };

struct FieldSchema {
    std::string name;
    Direction dir = Direction::In;
    size_t byte_len = 0;
    // Binding details used by harness/KAT generation; not serialized.
    std::string elem_type;   // resolved C type of one element
    size_t elem_count = 1;
    size_t elem_width = 0;
};

struct KatCase {
    int count = 0;
    std::map<std::string, std::vector<uint8_t>> values;
};

struct ParseError : std::runtime_error {
    ParseError(size_t line_no, const std::string& reason)
        : std::runtime_error("KAT parse error at line " + std::to_string(line_no) + ": " +
                             reason),
          line(line_no) {}
    size_t line;
};
struct SchemaMismatch : std::runtime_error {
    explicit SchemaMismatch(int case_index)
        : std::runtime_error("case " + std::to_string(case_index) +
                             " does not match the suite schema"),
          case_index(case_index) {}
    int case_index;
};

struct KatSuite {
    std::vector<FieldSchema> schema;
    std::vector<KatCase> cases;
    std::optional<uint64_t> seed;

    std::string serialize() const;
};

KatSuite parse_kats(std::string_view text);
KatSuite load_kats(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Toolchain adapter

struct ToolchainConfig {
    /// Command template; "{sources}" expands to the source file list and
    /// "{output}" to the binary path.
    std::vector<std::string> compiler_command = {"cc",        "-O1", "-fno-builtin",
                                                 "{sources}", "-o",  "{output}", "-lm"};
    std::vector<std::string> extra_flags;
    int timeout_seconds = 60;
};

struct SourceFile {
    std::string name;  // file name inside the workdir
    std::string text;
};

struct CompilerNotFound : std::runtime_error {
    explicit CompilerNotFound(const std::string& cmd)
        : std::runtime_error("compiler not found: " + cmd) {}
};
struct BuildTimeout : std::runtime_error {
    BuildTimeout() : std::runtime_error("compilation timed out") {}
};

struct BuildResult {
    enum class Status { Success, CompileFailed };
    Status status = Status::CompileFailed;
    std::filesystem::path binary;
    std::string stderr_text;  // verbatim compiler diagnostics

    bool ok() const { return status == Status::Success; }
};

/// Writes `sources` into `workdir` and invokes the compiler on the .c files.
/// CompileFailed is a result, not an exception: it feeds corrective prompts.
BuildResult build(const std::vector<SourceFile>& sources, const ToolchainConfig& toolchain,
                  const std::filesystem::path& workdir);

// ---------------------------------------------------------------------------
// KAT execution

struct Mismatch {
    int case_index = 0;
    std::string field;
    std::string expected_hex;
    std::string actual_hex;
};

struct KatOutcome {
    size_t passed = 0;
    size_t failed = 0;
    std::optional<Mismatch> first_mismatch;

    bool all_passed(size_t expected_cases) const {
        return failed == 0 && passed == expected_cases;
    }
    std::string summary() const;
};

struct ExecutionFailed : std::runtime_error {
    explicit ExecutionFailed(int status)
        : std::runtime_error("KAT binary exited with status " + std::to_string(status)),
          exit_status(status) {}
    int exit_status;
};
struct RunTimeout : std::runtime_error {
    RunTimeout() : std::runtime_error("KAT execution timed out") {}
};
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(int case_index)
        : std::runtime_error("malformed harness output at case " + std::to_string(case_index)),
          case_index(case_index) {}
    int case_index;
};

/// Streams every case to the binary (hex lines per the harness protocol)
/// and compares outputs bitwise. Mismatches never stop the run early.
KatOutcome run_kats(const std::filesystem::path& binary, const KatSuite& suite,
                    int timeout_seconds);

// ---------------------------------------------------------------------------
// Harness and KAT generation

struct SchemaBindingError : std::runtime_error {
    explicit SchemaBindingError(const std::string& param)
        : std::runtime_error("cannot bind parameter to schema field: " + param),
          param(param) {}
    std::string param;
};

struct ExtentOverrides {
    std::map<std::string, long long> extents;  // "<fn>.<param>" -> element count
};

/// Infers the KAT schema from the top function's signature: value scalars
/// and const arrays are inputs, non-const arrays are zeroed outputs, a
/// non-void return becomes the "ret" output, and aggregate parameters
/// expand to one input field per primitive leaf (path-joined names).
std::vector<FieldSchema> infer_schema(const csrc::SourceUnit& unit, std::string_view top_fn,
                                      const ExtentOverrides& overrides = {});

/// Emits a main() that reads input fields as hex lines per case, invokes
/// the top function (calling any table initializers once up front), and
/// prints output fields as hex lines followed by a blank line. The result
/// is compiled appended to the unit source.
std::string gen_harness(const csrc::SourceUnit& unit, std::string_view top_fn,
                        const std::vector<FieldSchema>& schema);

/// Seeded generation: random inputs (floating fields get finite values),
/// reference execution for outputs. Identical seeds yield identical bytes.
KatSuite gen_kats(const csrc::SourceUnit& unit, std::string_view top_fn,
                  const std::vector<FieldSchema>& schema, size_t n_cases, uint64_t seed,
                  const ToolchainConfig& toolchain, const std::filesystem::path& workdir);

/// Widths for the supported fixed-width scalar types (after typedef
/// resolution); 0 when unknown.
size_t scalar_width(std::string_view resolved_type);

}  // namespace hlspipe::verify
