#pragma once

// Internal helpers shared by the harness generator and the aggregate
// flattening transform: struct leaf enumeration, context-pointer
// resolution, and leaf mutability analysis.

#include <optional>
#include <string>
#include <vector>

#include "hlspipe/csrc.hpp"

namespace hlspipe::internal {

struct AggregateLeaf {
    std::vector<std::string> path;  // field names from the struct root
    std::string name;               // path joined with '_'
    std::string elem_type;          // declared element type text
    bool is_array = false;
    long long extent = 1;           // element count for arrays
};

struct LeafError {
    enum class Kind { Unbounded, TooDeep } kind;
    std::string field;
};

/// Enumerates primitive leaves of `s` in declaration order, recursing into
/// nested aggregates up to `max_depth`. Returns the error instead of a list
/// when a field has no literal extent or nesting is too deep.
std::variant<std::vector<AggregateLeaf>, LeafError> aggregate_leaves(
    const csrc::SourceUnit& unit, const csrc::StructInfo& s, int max_depth);

struct ContextBinding {
    const csrc::StructInfo* struct_info = nullptr;
    std::string root_var;              // alias or the parameter itself
    bool via_pointer = true;           // accesses use '->' (vs '.')
    std::vector<csrc::Span> alias_statements;  // decl/assign statements to drop
};

/// Resolves the struct behind an aggregate parameter. For void* context
/// pointers this follows the local alias assignment (`T *spc = ctx;` or a
/// separate declaration plus `spc = ctx;`).
std::optional<ContextBinding> resolve_aggregate_param(const csrc::SourceUnit& unit,
                                                      const csrc::FunctionInfo& fn,
                                                      const csrc::ParamInfo& param);

/// A leaf field counts as written when any function body assigns through
/// `->name`/`.name` or takes its address. Matching is by terminal field
/// name, deliberately conservative.
bool leaf_field_written(const csrc::SourceUnit& unit, const std::string& field_name);

}  // namespace hlspipe::internal
