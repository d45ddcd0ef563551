#include "internal/aggregates.hpp"

#include <variant>

namespace hlspipe::internal {

using csrc::SourceUnit;
using csrc::StructInfo;
using csrc::Token;
using csrc::TokenKind;

namespace {

const StructInfo* struct_of_type(const SourceUnit& unit, std::string_view type_text) {
    for (const auto& t : csrc::tokenize(std::string(type_text))) {
        if (t.kind != TokenKind::Identifier || csrc::is_c_keyword(t.text)) continue;
        if (const auto* s = unit.find_struct(t.text)) return s;
        std::string resolved = unit.resolve_type(t.text);
        if (const auto* s = unit.find_struct(resolved)) return s;
    }
    return nullptr;
}

bool walk_leaves(const SourceUnit& unit, const StructInfo& s, int depth, int max_depth,
                 std::vector<std::string>& path, std::vector<AggregateLeaf>& out,
                 LeafError& err) {
    if (depth > max_depth) {
        err = {LeafError::Kind::TooDeep, s.name};
        return false;
    }
    for (const auto& f : s.fields) {
        const StructInfo* nested = struct_of_type(unit, f.type_text);
        if (nested) {
            if (f.is_array) {
                err = {LeafError::Kind::Unbounded, f.name};  // arrays of structs unsupported
                return false;
            }
            path.push_back(f.name);
            if (!walk_leaves(unit, *nested, depth + 1, max_depth, path, out, err)) return false;
            path.pop_back();
            continue;
        }
        if (f.is_array && !f.extent) {
            err = {LeafError::Kind::Unbounded, f.name};
            return false;
        }
        AggregateLeaf leaf;
        leaf.path = path;
        leaf.path.push_back(f.name);
        for (size_t i = 0; i < leaf.path.size(); ++i) {
            if (i) leaf.name += '_';
            leaf.name += leaf.path[i];
        }
        leaf.elem_type = f.type_text;
        leaf.is_array = f.is_array;
        leaf.extent = f.is_array ? *f.extent : 1;
        out.push_back(std::move(leaf));
    }
    return true;
}

}  // namespace

std::variant<std::vector<AggregateLeaf>, LeafError> aggregate_leaves(
    const SourceUnit& unit, const StructInfo& s, int max_depth) {
    std::vector<AggregateLeaf> out;
    std::vector<std::string> path;
    LeafError err{LeafError::Kind::Unbounded, ""};
    if (!walk_leaves(unit, s, 1, max_depth, path, out, err)) return err;
    return out;
}

std::optional<ContextBinding> resolve_aggregate_param(const SourceUnit& unit,
                                                      const csrc::FunctionInfo& fn,
                                                      const csrc::ParamInfo& param) {
    ContextBinding binding;

    // Directly typed parameter.
    if (const StructInfo* s = struct_of_type(unit, param.type_text)) {
        binding.struct_info = s;
        binding.root_var = param.name;
        binding.via_pointer = param.is_pointer;
        return binding;
    }

    // Opaque void*: look for a struct-pointer alias initialized or assigned
    // from the parameter inside the body.
    auto body = std::string_view(unit.text).substr(fn.body_span.begin, fn.body_span.length());
    auto tokens = csrc::tokenize(body);
    std::vector<size_t> sig;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].kind != TokenKind::Whitespace && tokens[i].kind != TokenKind::Comment)
            sig.push_back(i);
    }
    auto tok = [&](size_t k) -> const Token& { return tokens[sig[k]]; };
    auto abs_span = [&](size_t a, size_t b) {
        return csrc::Span{fn.body_span.begin + tok(a).span.begin,
                          fn.body_span.begin + tok(b).span.end};
    };

    std::string alias;
    const StructInfo* alias_struct = nullptr;
    std::vector<csrc::Span> stmts;

    // Pass 1: `T * x = [(T *)] param ;` and bare decls `T * x ;`
    std::string decl_var;
    const StructInfo* decl_struct = nullptr;
    size_t decl_start = size_t(-1);
    for (size_t k = 0; k + 2 < sig.size(); ++k) {
        const Token& t = tok(k);
        if (t.kind != TokenKind::Identifier || csrc::is_c_keyword(t.text)) continue;
        const StructInfo* s = unit.find_struct(t.text);
        if (!s) {
            std::string r = unit.resolve_type(t.text);
            s = unit.find_struct(r);
        }
        if (!s) continue;
        if (!tok(k + 1).is("*")) continue;
        if (tok(k + 2).kind != TokenKind::Identifier) continue;
        // preceding token must be a statement boundary, not a cast paren
        if (k > 0 && !(tok(k - 1).is(";") || tok(k - 1).is("{") || tok(k - 1).is("}")))
            continue;
        std::string var(tok(k + 2).text);
        size_t j = k + 3;
        if (j < sig.size() && tok(j).is(";")) {
            decl_var = var;
            decl_struct = s;
            decl_start = k;
            continue;
        }
        if (j < sig.size() && tok(j).is("=")) {
            // optional cast then the parameter name, then ';'
            size_t v = j + 1;
            if (v < sig.size() && tok(v).is("(")) {
                while (v < sig.size() && !tok(v).is(")")) ++v;
                ++v;
            }
            if (v < sig.size() && tok(v).text == param.name && v + 1 < sig.size() &&
                tok(v + 1).is(";")) {
                alias = var;
                alias_struct = s;
                stmts.push_back(abs_span(k, v + 1));
                break;
            }
        }
    }

    // Pass 2: separate `x = [(T *)] param ;` assignment for a bare decl.
    if (alias.empty() && !decl_var.empty()) {
        for (size_t k = 0; k + 2 < sig.size(); ++k) {
            if (tok(k).text != decl_var || !tok(k + 1).is("=")) continue;
            if (k > 0 && !(tok(k - 1).is(";") || tok(k - 1).is("{") || tok(k - 1).is("}")))
                continue;
            size_t v = k + 2;
            if (v < sig.size() && tok(v).is("(")) {
                while (v < sig.size() && !tok(v).is(")")) ++v;
                ++v;
            }
            if (v < sig.size() && tok(v).text == param.name && v + 1 < sig.size() &&
                tok(v + 1).is(";")) {
                alias = decl_var;
                alias_struct = decl_struct;
                // dropped: the declaration statement and the assignment
                size_t d_end = decl_start;
                while (d_end < sig.size() && !tok(d_end).is(";")) ++d_end;
                stmts.push_back(abs_span(decl_start, d_end));
                stmts.push_back(abs_span(k, v + 1));
                break;
            }
        }
    }

    if (alias.empty()) return std::nullopt;
    binding.struct_info = alias_struct;
    binding.root_var = alias;
    binding.via_pointer = true;
    binding.alias_statements = std::move(stmts);
    return binding;
}

bool leaf_field_written(const SourceUnit& unit, const std::string& field_name) {
    auto tokens = csrc::tokenize(unit.text);
    std::vector<size_t> sig;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].kind != TokenKind::Whitespace && tokens[i].kind != TokenKind::Comment)
            sig.push_back(i);
    }
    auto is_assign = [](std::string_view t) {
        return t == "=" || t == "+=" || t == "-=" || t == "*=" || t == "/=" || t == "%=" ||
               t == "<<=" || t == ">>=" || t == "&=" || t == "|=" || t == "^=" || t == "++" ||
               t == "--";
    };
    for (size_t k = 1; k < sig.size(); ++k) {
        const Token& t = tokens[sig[k]];
        if (t.kind != TokenKind::Identifier || t.text != field_name) continue;
        const Token& prev = tokens[sig[k - 1]];
        if (!prev.is("->") && !prev.is(".")) continue;
        // skip [..] groups after the access
        size_t j = k + 1;
        int depth = 0;
        while (j < sig.size()) {
            const Token& u = tokens[sig[j]];
            if (u.is("[")) { ++depth; ++j; continue; }
            if (u.is("]")) { --depth; ++j; continue; }
            if (depth > 0) { ++j; continue; }
            break;
        }
        if (j < sig.size() && is_assign(tokens[sig[j]].text)) return true;
        // address-of: scan back across the access chain for '&'
        size_t b = k - 1;
        while (b > 0) {
            const Token& u = tokens[sig[b]];
            if (u.is("->") || u.is(".") ||
                (u.kind == TokenKind::Identifier && !csrc::is_c_keyword(u.text))) {
                --b;
                continue;
            }
            break;
        }
        if (tokens[sig[b]].is("&")) return true;
    }
    return false;
}

}  // namespace hlspipe::internal
