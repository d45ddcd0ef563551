#include "hlspipe/csrc.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

namespace hlspipe::csrc {

namespace {

// Indices into the full token vector, significant tokens only (no
// whitespace/comments). Directives stay: they are structural at top level.
struct TokenView {
    const std::vector<Token>& all;
    std::vector<size_t> sig;

    explicit TokenView(const std::vector<Token>& tokens) : all(tokens) {
        for (size_t i = 0; i < tokens.size(); ++i) {
            TokenKind k = tokens[i].kind;
            if (k != TokenKind::Whitespace && k != TokenKind::Comment) sig.push_back(i);
        }
    }

    size_t size() const { return sig.size(); }
    const Token& at(size_t si) const { return all[sig[si]]; }
};

bool open_bracket(std::string_view t) { return t == "(" || t == "{" || t == "["; }
bool close_bracket(std::string_view t) { return t == ")" || t == "}" || t == "]"; }

char matching_open(std::string_view t) {
    if (t == ")") return '(';
    if (t == "}") return '{';
    return '[';
}

// match[si] = significant index of the matching bracket, both directions.
std::vector<size_t> match_brackets(const TokenView& tv) {
    std::vector<size_t> match(tv.size(), size_t(-1));
    std::vector<size_t> stack;
    for (size_t si = 0; si < tv.size(); ++si) {
        const Token& t = tv.at(si);
        if (t.kind != TokenKind::Punct) continue;
        if (open_bracket(t.text)) {
            stack.push_back(si);
        } else if (close_bracket(t.text)) {
            if (stack.empty() ||
                tv.at(stack.back()).text[0] != matching_open(t.text)) {
                throw UnsupportedConstruct(t.span, "unbalanced brackets");
            }
            match[stack.back()] = si;
            match[si] = stack.back();
            stack.pop_back();
        }
    }
    if (!stack.empty()) {
        throw UnsupportedConstruct(tv.at(stack.back()).span, "unbalanced brackets");
    }
    return match;
}

std::optional<long long> parse_int_literal(std::string_view text) {
    std::string s(text);
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 0);
    if (end == s.c_str()) return std::nullopt;
    // Allow integer suffixes, reject float-looking literals.
    for (const char* p = end; *p; ++p) {
        char c = char(std::tolower(*p));
        if (c != 'u' && c != 'l') return std::nullopt;
    }
    return v;
}

bool is_assign_op(std::string_view t) {
    return t == "=" || t == "+=" || t == "-=" || t == "*=" || t == "/=" ||
           t == "%=" || t == "<<=" || t == ">>=" || t == "&=" || t == "|=" ||
           t == "^=" || t == "++" || t == "--";
}

struct Parser {
    const std::string& text;
    std::vector<Token> tokens;
    TokenView tv;
    std::vector<size_t> match;
    SourceUnit unit;

    explicit Parser(const std::string& src)
        : text(src), tokens(tokenize(src)), tv(tokens), match(match_brackets(tv)) {}

    std::string spelled(size_t si_begin, size_t si_end) const {
        // Raw source between two significant tokens, trimmed.
        if (si_begin >= si_end) return {};
        size_t a = tv.at(si_begin).span.begin;
        size_t b = tv.at(si_end - 1).span.end;
        std::string s = text.substr(a, b - a);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.pop_back();
        size_t st = 0;
        while (st < s.size() && (s[st] == ' ' || s[st] == '\t' || s[st] == '\n')) ++st;
        return s.substr(st);
    }

    bool is_type_start(const Token& t) const {
        if (t.kind != TokenKind::Identifier) return false;
        static const std::set<std::string_view> type_kw = {
            "void", "char", "short", "int", "long", "float", "double", "signed",
            "unsigned", "const", "volatile", "static", "extern", "inline",
            "register", "struct", "union", "enum", "_Bool"};
        if (type_kw.count(t.text)) return true;
        return !is_c_keyword(t.text);  // typedef names
    }

    void parse_directive(size_t si) {
        std::string_view d = tv.at(si).text;
        size_t pos = d.find("include");
        if (pos == std::string_view::npos) return;
        size_t lt = d.find_first_of("<\"", pos);
        if (lt == std::string_view::npos) return;
        char closer = d[lt] == '<' ? '>' : '"';
        size_t gt = d.find(closer, lt + 1);
        if (gt == std::string_view::npos) return;
        unit.includes.push_back(IncludeInfo{
            std::string(d.substr(lt + 1, gt - lt - 1)), tv.at(si).span});
    }

    // Parses the fields of a struct/union body between braces (exclusive).
    std::vector<StructField> parse_struct_fields(size_t si_open, size_t si_close) {
        std::vector<StructField> fields;
        size_t si = si_open + 1;
        while (si < si_close) {
            size_t stmt_end = si;
            while (stmt_end < si_close && !tv.at(stmt_end).is(";")) {
                if (match[stmt_end] != size_t(-1) && open_bracket(tv.at(stmt_end).text)) {
                    stmt_end = match[stmt_end];
                }
                ++stmt_end;
            }
            if (stmt_end > si) {
                // declarator = last non-keyword identifier before any '[' suffix
                size_t name_si = size_t(-1);
                for (size_t k = si; k < stmt_end; ++k) {
                    const Token& t = tv.at(k);
                    if (t.is("[")) break;
                    if (t.kind == TokenKind::Identifier && !is_c_keyword(t.text)) name_si = k;
                }
                if (name_si != size_t(-1)) {
                    StructField f;
                    f.name = std::string(tv.at(name_si).text);
                    f.type_text = spelled(si, name_si);
                    size_t after = name_si + 1;
                    if (after < stmt_end && tv.at(after).is("[")) {
                        f.is_array = true;
                        size_t close = match[after];
                        if (close == after + 2) f.extent = parse_int_literal(tv.at(after + 1).text);
                    }
                    fields.push_back(std::move(f));
                }
            }
            si = stmt_end + 1;
        }
        return fields;
    }

    std::vector<ParamInfo> parse_params(size_t si_open, size_t si_close) {
        std::vector<ParamInfo> params;
        size_t start = si_open + 1;
        if (start >= si_close) return params;
        if (si_close == si_open + 2 && tv.at(start).is("void")) return params;

        std::vector<std::pair<size_t, size_t>> ranges;
        size_t cur = start;
        for (size_t k = start; k < si_close; ++k) {
            if (open_bracket(tv.at(k).text)) { k = match[k]; continue; }
            if (tv.at(k).is(",")) {
                ranges.emplace_back(cur, k);
                cur = k + 1;
            }
        }
        ranges.emplace_back(cur, si_close);

        for (auto [a, b] : ranges) {
            if (a >= b) continue;
            if (tv.at(a).is("...")) continue;
            ParamInfo p;
            p.span = Span{tv.at(a).span.begin, tv.at(b - 1).span.end};
            size_t name_si = size_t(-1);
            for (size_t k = a; k < b; ++k) {
                const Token& t = tv.at(k);
                if (t.is("[")) break;
                if (t.kind == TokenKind::Identifier && !is_c_keyword(t.text)) name_si = k;
                if (t.is("const")) p.is_const = true;
                if (t.is("*")) p.is_pointer = true;
            }
            if (name_si == size_t(-1)) {
                // unnamed parameter, e.g. prototype style
                p.type_text = spelled(a, b);
                params.push_back(std::move(p));
                continue;
            }
            p.name = std::string(tv.at(name_si).text);
            p.type_text = spelled(a, name_si);
            size_t after = name_si + 1;
            if (after < b && tv.at(after).is("[")) {
                size_t close = match[after];
                if (close == after + 2) p.array_extent = parse_int_literal(tv.at(after + 1).text);
                else if (close == after + 1) p.array_extent = std::nullopt;  // name[]
            }
            // A type identifier may have ended up as the "name" for unnamed
            // params like "sampler_context *": only possible without any
            // identifier after it, which the loop above already handles.
            params.push_back(std::move(p));
        }
        return params;
    }

    void finalize_param_aggregates() {
        for (auto& fn : unit.functions) {
            for (auto& p : fn.params) {
                p.is_aggregate = type_is_aggregate(p.type_text, p.is_pointer);
            }
        }
    }

    bool type_is_aggregate(std::string_view type_text, bool is_pointer) const {
        // Tokenize the type text cheaply.
        std::string t(type_text);
        if (t.find("struct") != std::string::npos || t.find("union") != std::string::npos)
            return true;
        if (is_pointer && t.find("void") != std::string::npos) return true;  // opaque ctx
        for (auto toks = tokenize(t); const Token& tok : toks) {
            if (tok.kind != TokenKind::Identifier || is_c_keyword(tok.text)) continue;
            std::string resolved = resolve_type_internal(tok.text);
            if (find_struct_internal(resolved) || find_struct_internal(tok.text)) return true;
        }
        return false;
    }

    const StructInfo* find_struct_internal(std::string_view name) const {
        for (const auto& s : unit.structs)
            if (s.name == name) return &s;
        return nullptr;
    }

    std::string resolve_type_internal(std::string_view name) const {
        std::string cur(name);
        for (int depth = 0; depth < 8; ++depth) {
            bool advanced = false;
            for (const auto& td : unit.typedefs) {
                if (td.name == cur && !td.underlying.empty()) {
                    cur = td.underlying;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        return cur;
    }

    void parse_typedef(size_t si, size_t stmt_end) {
        // typedef struct [tag] { ... } name;  |  typedef <type> name;
        size_t brace = size_t(-1);
        for (size_t k = si; k < stmt_end; ++k) {
            if (tv.at(k).is("{")) { brace = k; break; }
        }
        if (brace != size_t(-1)) {
            size_t close = match[brace];
            size_t name_si = size_t(-1);
            for (size_t k = close + 1; k < stmt_end; ++k) {
                if (tv.at(k).kind == TokenKind::Identifier && !is_c_keyword(tv.at(k).text))
                    name_si = k;
            }
            if (name_si != size_t(-1)) {
                StructInfo s;
                s.name = std::string(tv.at(name_si).text);
                s.fields = parse_struct_fields(brace, close);
                s.span = Span{tv.at(si).span.begin, tv.at(stmt_end).span.end};
                unit.structs.push_back(std::move(s));
                unit.typedefs.push_back(TypedefInfo{
                    std::string(tv.at(name_si).text), "", unit.structs.back().span});
            }
            return;
        }
        size_t name_si = size_t(-1);
        for (size_t k = si + 1; k < stmt_end; ++k) {
            const Token& t = tv.at(k);
            if (t.is("[")) break;
            if (t.kind == TokenKind::Identifier && !is_c_keyword(t.text)) name_si = k;
        }
        if (name_si == size_t(-1)) return;
        TypedefInfo td;
        td.name = std::string(tv.at(name_si).text);
        td.underlying = spelled(si + 1, name_si);
        td.span = Span{tv.at(si).span.begin, tv.at(stmt_end).span.end};
        unit.typedefs.push_back(std::move(td));
    }

    void parse_global(size_t si, size_t stmt_end) {
        // Reject prototypes: identifier immediately followed by '(' at depth 0.
        for (size_t k = si; k < stmt_end; ++k) {
            const Token& t = tv.at(k);
            if (open_bracket(t.text)) {
                if (t.is("(") && k > si && tv.at(k - 1).kind == TokenKind::Identifier &&
                    !is_c_keyword(tv.at(k - 1).text)) {
                    return;  // function prototype or macro call; not modeled
                }
                k = match[k];
            }
        }

        bool is_const = false, is_static = false;
        size_t eq_si = size_t(-1);
        for (size_t k = si; k < stmt_end; ++k) {
            const Token& t = tv.at(k);
            if (open_bracket(t.text)) { k = match[k]; continue; }
            if (t.is("const")) is_const = true;
            if (t.is("static")) is_static = true;
            if (t.is("=") && eq_si == size_t(-1)) eq_si = k;
        }
        size_t decl_limit = eq_si == size_t(-1) ? stmt_end : eq_si;

        size_t name_si = size_t(-1);
        for (size_t k = si; k < decl_limit; ++k) {
            const Token& t = tv.at(k);
            if (t.is("[")) break;
            if (open_bracket(t.text)) { k = match[k]; continue; }
            if (t.kind == TokenKind::Identifier && !is_c_keyword(t.text)) name_si = k;
        }
        if (name_si == size_t(-1)) return;

        GlobalInfo g;
        g.name = std::string(tv.at(name_si).text);
        g.span = Span{tv.at(si).span.begin, tv.at(stmt_end).span.end};
        g.is_const_qualified = is_const;
        g.is_static = is_static;
        g.has_initializer = eq_si != size_t(-1);
        {
            // element type: declaration tokens before the name, minus storage class
            std::string ty;
            for (size_t k = si; k < name_si; ++k) {
                std::string_view w = tv.at(k).text;
                if (w == "static" || w == "extern") continue;
                if (!ty.empty()) ty += ' ';
                ty += std::string(w);
            }
            g.element_type = ty;
        }
        size_t after = name_si + 1;
        if (after < decl_limit && tv.at(after).is("[")) {
            g.is_array = true;
            size_t close = match[after];
            if (close == after + 2) g.element_count = parse_int_literal(tv.at(after + 1).text);
        }
        unit.globals.push_back(std::move(g));
    }

    // Top-level walk: functions, globals, typedefs, struct defs, includes.
    void parse_top_level() {
        size_t si = 0;
        const size_t n = tv.size();
        while (si < n) {
            const Token& t = tv.at(si);
            if (t.kind == TokenKind::Directive) {
                parse_directive(si);
                ++si;
                continue;
            }
            if (t.is(";")) { ++si; continue; }

            size_t stmt_begin = si;
            if (t.is("typedef")) {
                size_t j = si;
                while (j < n && !tv.at(j).is(";")) {
                    if (open_bracket(tv.at(j).text)) j = match[j];
                    ++j;
                }
                if (j < n) parse_typedef(si, j);
                si = j + 1;
                continue;
            }
            if ((t.is("struct") || t.is("union")) && si + 2 < n &&
                tv.at(si + 1).kind == TokenKind::Identifier && tv.at(si + 2).is("{")) {
                size_t close = match[si + 2];
                StructInfo s;
                s.name = std::string(tv.at(si + 1).text);
                s.fields = parse_struct_fields(si + 2, close);
                size_t j = close;
                while (j < n && !tv.at(j).is(";")) ++j;
                s.span = Span{t.span.begin, j < n ? tv.at(j).span.end : tv.at(close).span.end};
                unit.structs.push_back(std::move(s));
                si = j + 1;
                continue;
            }

            // Scan forward: function definition or ';'-terminated declaration.
            size_t j = si;
            bool handled = false;
            while (j < n) {
                const Token& u = tv.at(j);
                if (u.kind == TokenKind::Directive) { ++j; continue; }
                if (u.is("(")) {
                    size_t close = match[j];
                    size_t after = close + 1;
                    if (after < n && tv.at(after).is("{") && j > stmt_begin &&
                        tv.at(j - 1).kind == TokenKind::Identifier &&
                        !is_c_keyword(tv.at(j - 1).text)) {
                        FunctionInfo fn;
                        fn.name = std::string(tv.at(j - 1).text);
                        fn.signature_span =
                            Span{tv.at(stmt_begin).span.begin, tv.at(close).span.end};
                        fn.body_span =
                            Span{tv.at(after).span.begin, tv.at(match[after]).span.end};
                        {
                            std::string ty;
                            for (size_t k = stmt_begin; k + 1 < j; ++k) {
                                std::string_view w = tv.at(k).text;
                                if (w == "static" || w == "extern" || w == "inline") continue;
                                if (!ty.empty()) ty += ' ';
                                ty += std::string(w);
                            }
                            fn.return_type = ty;
                        }
                        fn.params = parse_params(j, close);
                        unit.functions.push_back(std::move(fn));
                        si = match[after] + 1;
                        handled = true;
                        break;
                    }
                    j = close + 1;
                    continue;
                }
                if (u.is("{")) { j = match[j] + 1; continue; }
                if (u.is(";")) {
                    parse_global(stmt_begin, j);
                    si = j + 1;
                    handled = true;
                    break;
                }
                ++j;
            }
            if (!handled) break;  // trailing tokens with no terminator; preserved verbatim
        }
    }

    // ---- per-function body analysis ----

    size_t si_of_body_open(const FunctionInfo& fn) const {
        for (size_t si = 0; si < tv.size(); ++si) {
            if (tv.at(si).span.begin == fn.body_span.begin && tv.at(si).is("{")) return si;
        }
        return size_t(-1);
    }

    void analyze_body(FunctionInfo& fn) {
        size_t open = si_of_body_open(fn);
        if (open == size_t(-1)) return;
        size_t close = match[open];

        // call edges
        for (size_t k = open + 1; k < close; ++k) {
            const Token& t = tv.at(k);
            if (t.kind != TokenKind::Identifier || is_c_keyword(t.text)) continue;
            if (k + 1 < close && tv.at(k + 1).is("(")) {
                if (k > 0 && (tv.at(k - 1).is(".") || tv.at(k - 1).is("->"))) continue;
                unit.call_edges.push_back(CallEdge{fn.name, std::string(t.text), t.span});
            }
        }

        // writes to globals
        std::vector<std::string> writes;
        auto note_write = [&](const std::string& g) {
            if (std::find(writes.begin(), writes.end(), g) == writes.end()) writes.push_back(g);
        };
        for (size_t k = open + 1; k < close; ++k) {
            const Token& t = tv.at(k);
            if (t.kind != TokenKind::Identifier) continue;
            const GlobalInfo* g = nullptr;
            for (const auto& cand : unit.globals)
                if (cand.name == t.text) { g = &cand; break; }
            if (!g) continue;
            if (k > 0 && (tv.at(k - 1).is(".") || tv.at(k - 1).is("->"))) continue;
            if (k > 0 && (tv.at(k - 1).is("++") || tv.at(k - 1).is("--"))) {
                note_write(g->name);
                continue;
            }
            // memcpy/memset first argument
            if (k >= 2 && tv.at(k - 1).is("(") &&
                (tv.at(k - 2).is("memcpy") || tv.at(k - 2).is("memset"))) {
                note_write(g->name);
                continue;
            }
            size_t j = k + 1;
            while (j < close && tv.at(j).is("[")) j = match[j] + 1;
            if (j < close && is_assign_op(tv.at(j).text)) note_write(g->name);
        }
        fn.writes_globals = std::move(writes);

        // loops
        std::vector<LoopInfo> loops;
        for (size_t k = open + 1; k < close; ++k) {
            const Token& t = tv.at(k);
            if (t.kind != TokenKind::Identifier) continue;
            if (t.is("for") || t.is("while")) {
                if (k + 1 >= close || !tv.at(k + 1).is("(")) continue;
                // "while" of a do-while tail: preceded by '}' of a do body; the
                // do loop records it, skip here.
                if (t.is("while") && k > 0 && tv.at(k - 1).is("}")) {
                    size_t body_open = match[k - 1];
                    if (body_open > 0 && tv.at(body_open - 1).is("do")) continue;
                }
                size_t paren_close = match[k + 1];
                LoopInfo li;
                size_t body_si = paren_close + 1;
                if (body_si >= close) continue;
                if (tv.at(body_si).is("{")) {
                    size_t bclose = match[body_si];
                    li.body_span = Span{tv.at(body_si).span.begin, tv.at(bclose).span.end};
                    li.span = Span{t.span.begin, tv.at(bclose).span.end};
                } else {
                    size_t e = body_si;
                    while (e < close && !tv.at(e).is(";")) {
                        if (open_bracket(tv.at(e).text)) e = match[e];
                        ++e;
                    }
                    if (e >= close) continue;
                    li.body_span = Span{tv.at(body_si).span.begin, tv.at(e).span.end};
                    li.span = Span{t.span.begin, tv.at(e).span.end};
                }
                if (t.is("for")) li.trip_count = for_trip_count(k + 1, paren_close);
                loops.push_back(li);
            } else if (t.is("do")) {
                if (k + 1 >= close || !tv.at(k + 1).is("{")) continue;
                size_t bclose = match[k + 1];
                size_t w = bclose + 1;
                if (w + 1 < close && tv.at(w).is("while") && tv.at(w + 1).is("(")) {
                    size_t pc = match[w + 1];
                    size_t semi = pc + 1;
                    if (semi < close && tv.at(semi).is(";")) {
                        LoopInfo li;
                        li.body_span = Span{tv.at(k + 1).span.begin, tv.at(bclose).span.end};
                        li.span = Span{t.span.begin, tv.at(semi).span.end};
                        loops.push_back(li);
                    }
                }
            }
        }
        for (auto& li : loops) {
            int depth = 0;
            for (const auto& other : loops) {
                if (&other == &li) continue;
                if (other.span.begin < li.span.begin && li.span.end <= other.span.end) ++depth;
            }
            li.nesting_depth = depth;
        }
        std::sort(loops.begin(), loops.end(),
                  [](const LoopInfo& a, const LoopInfo& b) { return a.span.begin < b.span.begin; });
        fn.loops = std::move(loops);
    }

    // for (i = c0; i < c1; i++)-style headers with literal bounds.
    std::optional<long long> for_trip_count(size_t si_open, size_t si_close) {
        std::vector<std::pair<size_t, size_t>> parts;
        size_t cur = si_open + 1;
        for (size_t k = si_open + 1; k < si_close; ++k) {
            if (open_bracket(tv.at(k).text)) { k = match[k]; continue; }
            if (tv.at(k).is(";")) {
                parts.emplace_back(cur, k);
                cur = k + 1;
            }
        }
        parts.emplace_back(cur, si_close);
        if (parts.size() != 3) return std::nullopt;

        auto [ia, ib] = parts[0];
        auto [ca, cb] = parts[1];
        auto [sa, sb] = parts[2];

        // init: [type] ident = literal
        std::string var;
        std::optional<long long> start;
        {
            size_t eq = size_t(-1);
            for (size_t k = ia; k < ib; ++k)
                if (tv.at(k).is("=")) { eq = k; break; }
            if (eq == size_t(-1) || eq == ia || eq + 1 != ib - 1) {
                if (eq == size_t(-1) || eq == ia) return std::nullopt;
            }
            const Token& v = tv.at(eq - 1);
            if (v.kind != TokenKind::Identifier || is_c_keyword(v.text)) return std::nullopt;
            var = std::string(v.text);
            if (eq + 1 >= ib || tv.at(eq + 1).kind != TokenKind::Number) return std::nullopt;
            if (eq + 2 != ib) return std::nullopt;
            start = parse_int_literal(tv.at(eq + 1).text);
        }
        if (!start) return std::nullopt;

        // cond: ident < literal | ident <= literal
        bool inclusive = false;
        std::optional<long long> bound;
        {
            if (cb - ca != 3) return std::nullopt;
            if (!tv.at(ca).is(var)) return std::nullopt;
            std::string_view op = tv.at(ca + 1).text;
            if (op == "<=") inclusive = true;
            else if (op != "<") return std::nullopt;
            if (tv.at(ca + 2).kind != TokenKind::Number) return std::nullopt;
            bound = parse_int_literal(tv.at(ca + 2).text);
        }
        if (!bound) return std::nullopt;

        // step: i++ | ++i | i += k | i = i + k
        long long step = 0;
        {
            size_t len = sb - sa;
            if (len == 2 && tv.at(sa).is(var) && tv.at(sa + 1).is("++")) step = 1;
            else if (len == 2 && tv.at(sa).is("++") && tv.at(sa + 1).is(var)) step = 1;
            else if (len == 3 && tv.at(sa).is(var) && tv.at(sa + 1).is("+=") &&
                     tv.at(sa + 2).kind == TokenKind::Number) {
                auto v = parse_int_literal(tv.at(sa + 2).text);
                if (!v) return std::nullopt;
                step = *v;
            } else if (len == 5 && tv.at(sa).is(var) && tv.at(sa + 1).is("=") &&
                       tv.at(sa + 2).is(var) && tv.at(sa + 3).is("+") &&
                       tv.at(sa + 4).kind == TokenKind::Number) {
                auto v = parse_int_literal(tv.at(sa + 4).text);
                if (!v) return std::nullopt;
                step = *v;
            } else {
                return std::nullopt;
            }
        }
        if (step <= 0) return std::nullopt;

        long long lo = *start, hi = *bound;
        if (inclusive) {
            if (lo > hi) return 0;
            return (hi - lo) / step + 1;
        }
        if (lo >= hi) return 0;
        return (hi - lo + step - 1) / step;
    }

    SourceUnit run() && {
        unit.text = text;
        parse_top_level();
        finalize_param_aggregates();
        for (auto& fn : unit.functions) analyze_body(fn);
        return std::move(unit);
    }
};

}  // namespace

const FunctionInfo* SourceUnit::find_function(std::string_view name) const {
    for (const auto& f : functions)
        if (f.name == name) return &f;
    return nullptr;
}

const GlobalInfo* SourceUnit::find_global(std::string_view name) const {
    for (const auto& g : globals)
        if (g.name == name) return &g;
    return nullptr;
}

const StructInfo* SourceUnit::find_struct(std::string_view name) const {
    for (const auto& s : structs)
        if (s.name == name) return &s;
    return nullptr;
}

std::string SourceUnit::resolve_type(std::string_view name) const {
    std::string cur(name);
    for (int depth = 0; depth < 8; ++depth) {
        bool advanced = false;
        for (const auto& td : typedefs) {
            if (td.name == cur && !td.underlying.empty()) {
                cur = td.underlying;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return cur;
}

SourceUnit parse_unit(std::string text) {
    return Parser(text).run();
}

}  // namespace hlspipe::csrc
