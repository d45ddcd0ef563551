#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hlspipe::csrc {

/// Half-open byte range [begin, end) into SourceUnit::text.
struct Span {
    size_t begin = 0;
    size_t end = 0;

    size_t length() const { return end - begin; }
    bool contains(const Span& other) const {
        return begin <= other.begin && other.end <= end;
    }
    bool contains(size_t pos) const { return begin <= pos && pos < end; }
    bool operator==(const Span&) const = default;
};

// ---------------------------------------------------------------------------
// Tokens

enum class TokenKind {
    Identifier,
    Number,
    String,
    CharLit,
    Punct,
    Directive,   // whole preprocessor line, including continuations
    Comment,
    Whitespace,
};

struct Token {
    TokenKind kind;
    Span span;
    std::string_view text;  // view into the tokenized string

    bool is(std::string_view s) const { return text == s; }
};

/// Lexes C source. Never fails: unrecognized bytes become one-char Punct
/// tokens. The returned views alias `text`, which must outlive them.
std::vector<Token> tokenize(std::string_view text);

bool is_c_keyword(std::string_view ident);

// ---------------------------------------------------------------------------
// Model

struct ParamInfo {
    std::string name;
    std::string type_text;            // declared type as written, e.g. "const int *"
    bool is_pointer = false;
    bool is_aggregate = false;        // struct/union type or opaque void*
    bool is_const = false;
    std::optional<long long> array_extent;  // for name[N] with literal N
    Span span;                        // the parameter declaration
};

struct LoopInfo {
    Span span;        // keyword through end of body (incl. trailing ';' for do)
    Span body_span;   // the controlled statement or block
    std::optional<long long> trip_count;
    int nesting_depth = 0;
};

struct FunctionInfo {
    std::string name;
    Span signature_span;  // first declaration token through closing ')'
    Span body_span;       // '{' through matching '}' inclusive
    std::string return_type;
    std::vector<ParamInfo> params;
    std::vector<LoopInfo> loops;
    std::vector<std::string> writes_globals;

    Span full_span() const { return {signature_span.begin, body_span.end}; }
};

struct GlobalInfo {
    std::string name;
    Span span;  // the whole declaration including ';'
    std::string element_type;  // declared type without array suffix
    bool is_array = false;
    std::optional<long long> element_count;
    bool is_const_qualified = false;
    bool has_initializer = false;
    bool is_static = false;
};

struct IncludeInfo {
    std::string header;  // name inside <> or ""
    Span span;           // the directive line
};

struct CallEdge {
    std::string caller;
    std::string callee;
    Span span;  // the callee identifier token
};

struct StructField {
    std::string type_text;
    std::string name;
    bool is_array = false;
    std::optional<long long> extent;
};

struct StructInfo {
    std::string name;  // typedef name or struct tag
    std::vector<StructField> fields;
    Span span;
};

struct TypedefInfo {
    std::string name;
    std::string underlying;  // underlying type text (empty for struct typedefs)
    Span span;
};

struct SourceUnit {
    std::string text;
    std::vector<FunctionInfo> functions;
    std::vector<GlobalInfo> globals;
    std::vector<IncludeInfo> includes;
    std::vector<CallEdge> call_edges;
    std::vector<StructInfo> structs;
    std::vector<TypedefInfo> typedefs;

    const FunctionInfo* find_function(std::string_view name) const;
    const GlobalInfo* find_global(std::string_view name) const;
    const StructInfo* find_struct(std::string_view name) const;
    /// Resolves typedef chains; returns the final type text.
    std::string resolve_type(std::string_view name) const;
};

// ---------------------------------------------------------------------------
// Errors

struct UnsupportedConstruct : std::runtime_error {
    UnsupportedConstruct(Span s, std::string desc)
        : std::runtime_error("unsupported construct: " + desc),
          span(s),
          description(std::move(desc)) {}
    Span span;
    std::string description;
};

struct UnknownFunction : std::runtime_error {
    explicit UnknownFunction(std::string fn)
        : std::runtime_error("unknown function: " + fn), name(std::move(fn)) {}
    std::string name;
};

struct UnresolvedDependency : std::runtime_error {
    explicit UnresolvedDependency(std::string sym)
        : std::runtime_error("unresolved dependency: " + sym), name(std::move(sym)) {}
    std::string name;
};

// ---------------------------------------------------------------------------
// Operations

/// Parses one translation unit in the supported C subset. Unparsed regions
/// are preserved verbatim in `text`; rendering always round-trips.
SourceUnit parse_unit(std::string text);

/// The unit's exact source bytes.
inline const std::string& render(const SourceUnit& unit) { return unit.text; }

struct Closure {
    std::vector<std::string> defined;   // root first, DFS, lexicographic ties
    std::vector<std::string> external;  // called but not defined here, sorted
};

Closure call_closure(const SourceUnit& unit, std::string_view root);

/// Names that extract_slice accepts as undefined externals (libc and
/// friends) in addition to any caller-supplied allowance.
const std::vector<std::string>& default_external_allowlist();

std::string extract_slice(const SourceUnit& unit, std::string_view root,
                          const std::vector<std::string>& extra_externals = {});

}  // namespace hlspipe::csrc
