#pragma once

#include <string>
#include <vector>

#include "hlspipe/csrc.hpp"

namespace hlspipe::blockers {

enum class Category {
    MathLibCall,
    FloatingPoint,
    DynamicMemory,
    RuntimeInit,
    AggregateInterface,
    PointerInterface,
};

std::string_view category_name(Category c);

struct BlockerEntry {
    Category category;
    std::string function;
    csrc::Span span;
    std::string detail;
};

struct BlockerReport {
    std::vector<BlockerEntry> entries;
    std::string unit_digest;  // sha256 of the scanned source

    bool clean() const { return entries.empty(); }
    size_t count(Category c) const;
    /// One line per entry: `<category>\t<function>\t<start>..<end>\t<detail>`.
    std::string to_text() const;
};

struct ScanOptions {
    /// math.h identifiers treated as MathLibCall sites. floor/round/fabs are
    /// reported at "review" severity: many HLS flows accept them.
    std::vector<std::string> mathlib = {"sin",  "cos", "tan",   "pow",  "sqrt",
                                        "log",  "exp", "floor", "round", "fabs"};
    std::vector<std::string> mathlib_extra;
};

BlockerReport scan(const csrc::SourceUnit& unit, const ScanOptions& opts = {});

struct InitFunctionEvidence {
    bool is_init = false;
    std::vector<std::string> written_globals;  // global arrays filled by fn
    std::string reason;                        // why not, when is_init == false
};

/// True iff `fn` fills global arrays, reads none of its own parameters, and
/// is never called from inside a loop of another function.
InitFunctionEvidence is_init_function(const csrc::SourceUnit& unit, std::string_view fn);

}  // namespace hlspipe::blockers
