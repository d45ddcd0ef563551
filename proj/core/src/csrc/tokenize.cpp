#include "hlspipe/csrc.hpp"

#include <array>
#include <unordered_set>

namespace hlspipe::csrc {

namespace {

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_c_keyword(std::string_view ident) {
    static const std::unordered_set<std::string_view> kw = {
        "auto", "break", "case", "char", "const", "continue", "default", "do",
        "double", "else", "enum", "extern", "float", "for", "goto", "if",
        "inline", "int", "long", "register", "restrict", "return", "short",
        "signed", "sizeof", "static", "struct", "switch", "typedef", "union",
        "unsigned", "void", "volatile", "while", "_Bool", "_Static_assert",
        "_Alignas", "_Alignof"};
    return kw.count(ident) > 0;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    size_t i = 0;
    const size_t n = text.size();

    auto push = [&](TokenKind kind, size_t begin, size_t end) {
        tokens.push_back(Token{kind, Span{begin, end}, text.substr(begin, end - begin)});
    };

    while (i < n) {
        char c = text[i];
        size_t start = i;

        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
            while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                             text[i] == '\r' || text[i] == '\v' || text[i] == '\f')) {
                ++i;
            }
            push(TokenKind::Whitespace, start, i);
            continue;
        }

        // Preprocessor directive: '#' at start of line (possibly after ws).
        if (c == '#') {
            bool at_line_start = true;
            for (size_t j = start; j-- > 0;) {
                if (text[j] == '\n') break;
                if (text[j] != ' ' && text[j] != '\t') { at_line_start = false; break; }
            }
            if (at_line_start) {
                while (i < n) {
                    if (text[i] == '\\' && i + 1 < n && text[i + 1] == '\n') { i += 2; continue; }
                    if (text[i] == '\n') break;
                    ++i;
                }
                push(TokenKind::Directive, start, i);
                continue;
            }
        }

        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n') ++i;
            push(TokenKind::Comment, start, i);
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            i += 2;
            while (i + 1 < n && !(text[i] == '*' && text[i + 1] == '/')) ++i;
            i = (i + 1 < n) ? i + 2 : n;
            push(TokenKind::Comment, start, i);
            continue;
        }

        if (c == '"' || c == '\'') {
            char quote = c;
            ++i;
            while (i < n && text[i] != quote) {
                if (text[i] == '\\' && i + 1 < n) ++i;
                ++i;
            }
            if (i < n) ++i;
            push(quote == '"' ? TokenKind::String : TokenKind::CharLit, start, i);
            continue;
        }

        if (digit(c) || (c == '.' && i + 1 < n && digit(text[i + 1]))) {
            // One number token covers ints, floats, hex and exponents.
            ++i;
            while (i < n) {
                char d = text[i];
                if (ident_char(d) || d == '.') { ++i; continue; }
                if ((d == '+' || d == '-') && i > start &&
                    (text[i - 1] == 'e' || text[i - 1] == 'E' ||
                     text[i - 1] == 'p' || text[i - 1] == 'P')) {
                    ++i;
                    continue;
                }
                break;
            }
            push(TokenKind::Number, start, i);
            continue;
        }

        if (ident_start(c)) {
            while (i < n && ident_char(text[i])) ++i;
            push(TokenKind::Identifier, start, i);
            continue;
        }

        // Multi-char operators that matter for scanning; everything else is
        // a single-char punct.
        static const std::array<std::string_view, 19> ops = {
            "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==",
            "!=", "&&", "||", "+=", "-=", "*=", "/=", "%=", "..."};
        std::string_view rest = text.substr(i);
        size_t op_len = 1;
        for (auto op : ops) {
            if (rest.substr(0, op.size()) == op) { op_len = op.size(); break; }
        }
        // &=, |=, ^= are two-char as well
        if (op_len == 1 && rest.size() >= 2 && rest[1] == '=' &&
            (rest[0] == '&' || rest[0] == '|' || rest[0] == '^')) {
            op_len = 2;
        }
        i += op_len;
        push(TokenKind::Punct, start, i);
    }
    return tokens;
}

}  // namespace hlspipe::csrc
