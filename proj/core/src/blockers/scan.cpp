#include "hlspipe/blockers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hlspipe/util/sha256.hpp"

namespace hlspipe::blockers {

using csrc::Span;

std::string_view category_name(Category c) {
    switch (c) {
        case Category::MathLibCall: return "MathLibCall";
        case Category::FloatingPoint: return "FloatingPoint";
        case Category::DynamicMemory: return "DynamicMemory";
        case Category::RuntimeInit: return "RuntimeInit";
        case Category::AggregateInterface: return "AggregateInterface";
        case Category::PointerInterface: return "PointerInterface";
    }
    return "?";
}

size_t BlockerReport::count(Category c) const {
    return size_t(std::count_if(entries.begin(), entries.end(),
                                [c](const BlockerEntry& e) { return e.category == c; }));
}

std::string BlockerReport::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << category_name(e.category) << '\t' << e.function << '\t'
           << e.span.begin << ".." << e.span.end << '\t' << e.detail << '\n';
    }
    return os.str();
}

InitFunctionEvidence is_init_function(const csrc::SourceUnit& unit, std::string_view fn_name) {
    const csrc::FunctionInfo* fn = unit.find_function(fn_name);
    if (!fn) throw csrc::UnknownFunction(std::string(fn_name));

    InitFunctionEvidence ev;

    // (i) fills at least one global array
    for (const auto& g : fn->writes_globals) {
        const csrc::GlobalInfo* gi = unit.find_global(g);
        if (gi && gi->is_array) ev.written_globals.push_back(g);
    }
    if (ev.written_globals.empty()) {
        ev.reason = "writes no global array";
        return ev;
    }

    // (ii) reads no parameters
    if (!fn->params.empty()) {
        auto body = std::string_view(unit.text).substr(fn->body_span.begin,
                                                       fn->body_span.length());
        for (const auto& p : fn->params) {
            if (p.name.empty()) continue;
            for (const auto& t : csrc::tokenize(body)) {
                if (t.kind == csrc::TokenKind::Identifier && t.text == p.name) {
                    ev.reason = "reads parameter " + p.name;
                    return ev;
                }
            }
        }
    }

    // (iii) never called from inside a loop of another function
    for (const auto& e : unit.call_edges) {
        if (e.callee != fn_name || e.caller == fn_name) continue;
        const csrc::FunctionInfo* caller = unit.find_function(e.caller);
        if (!caller) continue;
        for (const auto& loop : caller->loops) {
            if (loop.span.contains(e.span)) {
                ev.reason = "called from a loop in " + e.caller;
                return ev;
            }
        }
    }

    ev.is_init = true;
    return ev;
}

BlockerReport scan(const csrc::SourceUnit& unit, const ScanOptions& opts) {
    BlockerReport report;
    report.unit_digest = util::sha256_hex(unit.text);

    std::set<std::string> mathlib(opts.mathlib.begin(), opts.mathlib.end());
    mathlib.insert(opts.mathlib_extra.begin(), opts.mathlib_extra.end());
    static const std::set<std::string_view> review_only = {"floor", "round", "fabs"};
    static const std::set<std::string_view> alloc_calls = {"malloc", "calloc", "realloc",
                                                           "free"};

    auto add = [&](Category c, const std::string& fn, Span span, std::string detail) {
        report.entries.push_back(BlockerEntry{c, fn, span, std::move(detail)});
    };

    // Call-site categories.
    for (const auto& e : unit.call_edges) {
        if (mathlib.count(e.callee)) {
            std::string detail = "call to " + e.callee;
            if (review_only.count(e.callee)) detail += " (severity: review)";
            add(Category::MathLibCall, e.caller, e.span, detail);
        }
        if (alloc_calls.count(e.callee)) {
            add(Category::DynamicMemory, e.caller, e.span, "call to " + e.callee);
        }
    }

    // Interface categories: one entry per offending parameter.
    for (const auto& fn : unit.functions) {
        for (const auto& p : fn.params) {
            if (p.is_aggregate) {
                add(Category::AggregateInterface, fn.name, p.span,
                    "aggregate parameter " + (p.name.empty() ? p.type_text : p.name));
            } else if (p.is_pointer && !p.array_extent && p.type_text.find('[') == std::string::npos) {
                add(Category::PointerInterface, fn.name, p.span,
                    "scalar pointer parameter " + p.name);
            }
        }
    }

    // Floating point: float/double type tokens and floating literals inside
    // function signatures and bodies.
    for (const auto& fn : unit.functions) {
        Span full = fn.full_span();
        auto sub = std::string_view(unit.text).substr(full.begin, full.length());
        for (const auto& t : csrc::tokenize(sub)) {
            Span abs{full.begin + t.span.begin, full.begin + t.span.end};
            if (t.kind == csrc::TokenKind::Identifier &&
                (t.text == "float" || t.text == "double")) {
                add(Category::FloatingPoint, fn.name, abs, "type " + std::string(t.text));
            } else if (t.kind == csrc::TokenKind::Number && t.text.substr(0, 2) != "0x" &&
                       t.text.substr(0, 2) != "0X" &&
                       t.text.find_first_of(".eE") != std::string_view::npos) {
                add(Category::FloatingPoint, fn.name, abs,
                    "floating literal " + std::string(t.text));
            }
        }
        // double/float typed parameters referenced through typedefs
        for (const auto& p : fn.params) {
            if (p.is_aggregate) continue;
            std::string resolved;
            for (const auto& tok : csrc::tokenize(p.type_text)) {
                if (tok.kind == csrc::TokenKind::Identifier && !csrc::is_c_keyword(tok.text))
                    resolved = unit.resolve_type(tok.text);
            }
            if (resolved.find("double") != std::string::npos ||
                resolved.find("float") != std::string::npos) {
                add(Category::FloatingPoint, fn.name, p.span,
                    "parameter " + p.name + " has floating type (" + resolved + ")");
            }
        }
    }

    // Runtime initialization of constant tables.
    for (const auto& fn : unit.functions) {
        auto ev = is_init_function(unit, fn.name);
        if (ev.is_init) {
            std::string detail = "initialization function fills";
            for (const auto& g : ev.written_globals) detail += " " + g;
            add(Category::RuntimeInit, fn.name, fn.signature_span, detail);
        }
    }

    std::sort(report.entries.begin(), report.entries.end(),
              [](const BlockerEntry& a, const BlockerEntry& b) {
                  if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
                  return int(a.category) < int(b.category);
              });
    // Duplicate (span, category) pairs would double-report one site.
    report.entries.erase(
        std::unique(report.entries.begin(), report.entries.end(),
                    [](const BlockerEntry& a, const BlockerEntry& b) {
                        return a.span.begin == b.span.begin && a.span.end == b.span.end &&
                               a.category == b.category;
                    }),
        report.entries.end());
    return report;
}

}  // namespace hlspipe::blockers
