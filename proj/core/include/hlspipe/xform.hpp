#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hlspipe/csrc.hpp"
#include "hlspipe/verify.hpp"

namespace hlspipe::xform {

// ---------------------------------------------------------------------------
// Patches

struct DeterministicRule {
    std::string name;
};
struct LlmExchangeRef {
    std::string id;
};
using Provenance = std::variant<DeterministicRule, LlmExchangeRef>;

struct Replacement {
    csrc::Span span;
    std::string text;
};

struct Patch {
    std::vector<Replacement> replacements;  // non-overlapping, ascending
    Provenance provenance = DeterministicRule{"none"};
    std::string description;

    bool empty() const { return replacements.empty(); }
};

struct OverlappingSpans : std::runtime_error {
    OverlappingSpans() : std::runtime_error("patch spans overlap or are unsorted") {}
};
struct SpanOutOfBounds : std::runtime_error {
    SpanOutOfBounds() : std::runtime_error("patch span out of bounds") {}
};
struct PostPatchParseFailure : std::runtime_error {
    explicit PostPatchParseFailure(const std::string& inner)
        : std::runtime_error("patched unit does not parse: " + inner) {}
};

/// Pure span substitution; validates ordering and bounds.
std::string splice(std::string_view text, const std::vector<Replacement>& replacements);

/// Applies and re-parses. The input unit is not modified.
csrc::SourceUnit apply(const csrc::SourceUnit& unit, const Patch& patch);

// ---------------------------------------------------------------------------
// Static memory mapping

struct NotStaticallySizable : std::runtime_error {
    NotStaticallySizable(csrc::Span s, std::string what_arg)
        : std::runtime_error("allocation size is not a literal constant: " + what_arg),
          span(s) {}
    csrc::Span span;
};

/// malloc/calloc with literal sizes become static buffers; free() calls and
/// free-only helper functions are dropped.
Patch map_static_memory(const csrc::SourceUnit& unit);

// ---------------------------------------------------------------------------
// Runtime-initialization removal

struct ConstTable {
    std::string name;
    std::string element_type;         // e.g. "double"
    std::vector<std::string> values;  // valid C literals, hexfloat for floating
    size_t length = 0;
};

struct NotInitFunction : std::runtime_error {
    explicit NotInitFunction(const std::string& fn, const std::string& why)
        : std::runtime_error(fn + " is not an initialization function: " + why) {}
};
struct RunnerBuildFailed : std::runtime_error {
    explicit RunnerBuildFailed(std::string stderr_text)
        : std::runtime_error("init runner failed to build"), compiler_stderr(std::move(stderr_text)) {}
    std::string compiler_stderr;
};
struct RunnerExecutionFailed : std::runtime_error {
    explicit RunnerExecutionFailed(int code)
        : std::runtime_error("init runner exited with status " + std::to_string(code)),
          exit_status(code) {}
    int exit_status;
};

std::string const_header_name(std::string_view unit_stem);
std::string render_const_header(std::string_view unit_stem,
                                const std::vector<ConstTable>& tables);

/// Compiles and runs `fn` standalone to capture the tables it fills, then
/// patches the unit: definition and calls removed, filled globals replaced
/// by const arrays in a generated header included at the top of the unit.
std::pair<Patch, std::vector<ConstTable>> remove_runtime_init(
    const csrc::SourceUnit& unit, std::string_view fn,
    const verify::ToolchainConfig& toolchain, const std::filesystem::path& workdir,
    std::string_view unit_stem = "unit");

// ---------------------------------------------------------------------------
// Aggregate flattening

struct UnboundedField : std::runtime_error {
    explicit UnboundedField(const std::string& field)
        : std::runtime_error("field has no statically known extent: " + field),
          name(field) {}
    std::string name;
};
struct RecursiveAggregate : std::runtime_error {
    explicit RecursiveAggregate(const std::string& what_arg)
        : std::runtime_error("aggregate not flattenable: " + what_arg) {}
};

struct FlattenOptions {
    int max_depth = 4;
    std::string hls_suffix = "_hls";
    std::string callee_suffix = "_no_structs";
};

/// Rewrites `top_fn` into `<top_fn>_hls` taking only primitive scalars and
/// fixed-extent arrays, rewrites callees reached through aggregate arguments
/// into `_no_structs` variants, and keeps a wrapper with the original
/// signature. Returns an empty patch when there is nothing to flatten.
Patch flatten_aggregates(const csrc::SourceUnit& unit, std::string_view top_fn,
                         const FlattenOptions& opts = {});

// ---------------------------------------------------------------------------
// Pointer-to-array rewriting

struct UnknownExtent : std::runtime_error {
    explicit UnknownExtent(const std::string& param)
        : std::runtime_error("no extent known for pointer parameter: " + param),
          name(param) {}
    std::string name;
};

struct ExtentConfig {
    /// "<function>.<param>" or "<param>" -> element count
    std::map<std::string, long long> extents;

    std::optional<long long> lookup(std::string_view fn, std::string_view param) const;
};

Patch pointers_to_arrays(const csrc::SourceUnit& unit, std::string_view fn,
                         const ExtentConfig& config = {});

// ---------------------------------------------------------------------------
// Pragma insertion

struct Unroll {
    long long factor = 1;
};
struct Pipeline {
    long long interval = 1;
};
using PragmaAction = std::variant<Unroll, Pipeline>;

struct PragmaDirective {
    std::string function;
    size_t loop_index = 0;  // index into FunctionInfo::loops
    PragmaAction action;
};

struct PragmaPlan {
    std::vector<PragmaDirective> directives;

    bool empty() const { return directives.empty(); }
    std::string describe() const;
};

struct UnknownLoop : std::runtime_error {
    UnknownLoop(const std::string& fn, size_t idx)
        : std::runtime_error("no loop " + std::to_string(idx) + " in " + fn) {}
};

struct PragmaDialect {
    std::string unroll_format = "#pragma hls_unroll {factor}";
    std::string pipeline_format = "#pragma hls_pipeline_init_interval {interval}";
};

std::string render_pragma(const PragmaDialect& dialect, const PragmaAction& action);

/// Inserts one directive line immediately before each targeted loop.
/// Directives already present are not duplicated, so re-applying a plan to
/// its own output yields an empty patch.
Patch insert_pragmas(const csrc::SourceUnit& unit, const PragmaPlan& plan,
                     const PragmaDialect& dialect = {});

}  // namespace hlspipe::xform
