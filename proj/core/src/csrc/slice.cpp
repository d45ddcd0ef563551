#include "hlspipe/csrc.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hlspipe::csrc {

const std::vector<std::string>& default_external_allowlist() {
    static const std::vector<std::string> names = {
        // mem/string
        "memcpy", "memset", "memmove", "memcmp", "strlen", "strcmp", "strncmp",
        "strcpy", "strncpy",
        // stdio
        "printf", "fprintf", "sprintf", "snprintf", "puts", "putchar", "fputs",
        "scanf", "fscanf", "sscanf", "fgets", "getchar", "fopen", "fclose",
        "fread", "fwrite",
        // stdlib
        "malloc", "calloc", "realloc", "free", "abs", "labs", "exit", "atoi",
        "atol", "rand", "srand",
        // math
        "sin", "cos", "tan", "asin", "acos", "atan", "atan2", "pow", "sqrt",
        "log", "log2", "log10", "exp", "floor", "ceil", "round", "fabs",
        "fmod", "ldexp", "frexp",
    };
    return names;
}

Closure call_closure(const SourceUnit& unit, std::string_view root) {
    if (!unit.find_function(root)) throw UnknownFunction(std::string(root));

    // caller -> sorted unique callees
    std::map<std::string, std::set<std::string>> callees;
    for (const auto& e : unit.call_edges) callees[e.caller].insert(e.callee);

    Closure result;
    std::set<std::string> visited;
    std::set<std::string> external;

    // Preorder DFS, children in lexicographic order.
    std::vector<std::string> stack{std::string(root)};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        if (visited.count(cur)) continue;
        visited.insert(cur);
        result.defined.push_back(cur);
        auto it = callees.find(cur);
        if (it == callees.end()) continue;
        // push reversed so the lexicographically first is visited first
        std::vector<std::string> next;
        for (const auto& callee : it->second) {
            if (visited.count(callee)) continue;
            if (unit.find_function(callee)) next.push_back(callee);
            else external.insert(callee);
        }
        for (auto rit = next.rbegin(); rit != next.rend(); ++rit) stack.push_back(*rit);
    }
    result.external.assign(external.begin(), external.end());
    return result;
}

namespace {

// Collects non-keyword identifiers appearing within a span.
void idents_in_span(const SourceUnit& unit, const Span& span, std::set<std::string>& out) {
    auto tokens = tokenize(std::string_view(unit.text).substr(span.begin, span.length()));
    for (const auto& t : tokens) {
        if (t.kind == TokenKind::Identifier && !is_c_keyword(t.text))
            out.insert(std::string(t.text));
    }
}

}  // namespace

std::string extract_slice(const SourceUnit& unit, std::string_view root,
                          const std::vector<std::string>& extra_externals) {
    Closure closure = call_closure(unit, root);

    std::set<std::string> kept_fns(closure.defined.begin(), closure.defined.end());
    std::set<std::string> referenced;
    for (const auto& name : closure.defined) {
        const FunctionInfo* fn = unit.find_function(name);
        idents_in_span(unit, fn->full_span(), referenced);
    }

    // Globals used by the closure, plus zero-parameter functions that fill
    // them (table initializers travel with their tables), to fixpoint.
    std::set<std::string> kept_globals;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : unit.globals) {
            if (kept_globals.count(g.name) || !referenced.count(g.name)) continue;
            kept_globals.insert(g.name);
            idents_in_span(unit, g.span, referenced);
            grew = true;
            for (const auto& fn : unit.functions) {
                if (kept_fns.count(fn.name) || !fn.params.empty()) continue;
                if (std::find(fn.writes_globals.begin(), fn.writes_globals.end(), g.name) !=
                    fn.writes_globals.end()) {
                    Closure sub = call_closure(unit, fn.name);
                    for (const auto& n : sub.defined) {
                        if (kept_fns.insert(n).second) {
                            idents_in_span(unit, unit.find_function(n)->full_span(), referenced);
                        }
                    }
                    for (const auto& n : sub.external) closure.external.push_back(n);
                }
            }
        }
    }

    // Types referenced transitively.
    std::set<std::string> kept_types;
    grew = true;
    while (grew) {
        grew = false;
        for (const auto& s : unit.structs) {
            if (!kept_types.count(s.name) && referenced.count(s.name)) {
                kept_types.insert(s.name);
                idents_in_span(unit, s.span, referenced);
                grew = true;
            }
        }
        for (const auto& td : unit.typedefs) {
            if (!kept_types.count(td.name) && referenced.count(td.name)) {
                kept_types.insert(td.name);
                idents_in_span(unit, td.span, referenced);
                grew = true;
            }
        }
    }

    // Undefined callees must be permitted externals.
    {
        std::set<std::string> allowed(default_external_allowlist().begin(),
                                      default_external_allowlist().end());
        allowed.insert(extra_externals.begin(), extra_externals.end());
        for (const auto& name : closure.external) {
            if (!allowed.count(name)) throw UnresolvedDependency(name);
        }
    }

    // Assemble in original text order.
    std::vector<Span> pieces;
    for (const auto& inc : unit.includes) pieces.push_back(inc.span);
    std::set<size_t> type_spans_seen;
    for (const auto& s : unit.structs) {
        if (kept_types.count(s.name) && type_spans_seen.insert(s.span.begin).second)
            pieces.push_back(s.span);
    }
    for (const auto& td : unit.typedefs) {
        if (kept_types.count(td.name) && type_spans_seen.insert(td.span.begin).second)
            pieces.push_back(td.span);
    }
    for (const auto& g : unit.globals) {
        if (kept_globals.count(g.name)) pieces.push_back(g.span);
    }
    for (const auto& fn : unit.functions) {
        if (kept_fns.count(fn.name)) pieces.push_back(fn.full_span());
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Span& a, const Span& b) { return a.begin < b.begin; });

    std::string out;
    for (const auto& p : pieces) {
        out += unit.text.substr(p.begin, p.length());
        out += "\n\n";
    }
    if (!out.empty()) out.pop_back();  // single trailing newline
    return out;
}

}  // namespace hlspipe::csrc
