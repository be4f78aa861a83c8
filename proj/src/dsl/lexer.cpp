#include "ragexec/dsl/token.hpp"

#include <cctype>
#include <unordered_set>

namespace ragexec::dsl {

namespace {

constexpr std::size_t kTokenCeiling = 100000;

const std::unordered_set<std::string> kKeywords = {
    "for", "in", "if", "elif", "else", "def", "return", "import",
    "and", "or", "not", "True", "False", "None",
    // reserved so the parser can report them as unsupported constructs
    "while", "class", "lambda", "try", "except", "finally", "with",
    "from", "as", "is", "pass", "break", "continue", "raise", "global",
    "del", "yield", "assert",
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;
    int bracket_depth = 0;
    std::vector<int> indent_stack{0};
    std::vector<Token> out;
    bool at_line_start = true;
    SyntaxDiagnostic error;
    bool failed = false;

    explicit Lexer(const std::string& s) : src(s) {}

    char peek(std::size_t off = 0) const {
        return pos + off < src.size() ? src[pos + off] : '\0';
    }
    bool eof() const { return pos >= src.size(); }

    void advance() {
        if (eof()) return;
        if (src[pos] == '\n') { line++; col = 1; } else { col++; }
        pos++;
    }

    void fail(const std::string& msg, SourceSpan span, const std::string& frag = "") {
        if (failed) return;
        failed = true;
        error = SyntaxDiagnostic{msg, span, frag};
    }

    SourceSpan here(int length = 1) const { return SourceSpan{line, col, length}; }

    void push(TokenKind kind, std::string text, SourceSpan span, long long iv = 0) {
        if (out.size() >= kTokenCeiling) {
            fail("program exceeds the token ceiling", span, "");
            return;
        }
        out.push_back(Token{kind, std::move(text), iv, span});
    }

    // Handles indentation at the start of a logical line. Returns false if the
    // line is blank or comment-only (caller skips it).
    bool handle_indent() {
        int width = 0;
        SourceSpan start = here();
        while (!eof()) {
            char c = peek();
            if (c == ' ') { width++; advance(); }
            else if (c == '\t') {
                fail("tab character in indentation (spaces only)", here(), "\\t");
                return false;
            } else break;
        }
        if (eof()) return false;
        if (peek() == '\n') { advance(); return false; }
        if (peek() == '#') { skip_comment(); return false; }
        if (peek() == '\r') { advance(); return false; }

        int current = indent_stack.back();
        if (width > current) {
            indent_stack.push_back(width);
            push(TokenKind::Indent, "", start);
        } else if (width < current) {
            while (indent_stack.back() > width) {
                indent_stack.pop_back();
                push(TokenKind::Dedent, "", start);
            }
            if (indent_stack.back() != width) {
                fail("inconsistent indentation", SourceSpan{line, 1, width}, "");
                return false;
            }
        }
        return true;
    }

    void skip_comment() {
        while (!eof() && peek() != '\n') advance();
        if (!eof()) advance(); // consume newline
    }

    void lex_string(char prefix) {
        // prefix: 0 = plain, 'r' = raw, 'f' = f-string
        SourceSpan start = here();
        char quote = peek();
        advance();
        if (prefix == 'f') { lex_fstring(quote, start); return; }
        std::string value;
        while (true) {
            if (eof() || peek() == '\n') {
                fail("unterminated string literal", start, std::string(1, quote));
                return;
            }
            char c = peek();
            if (c == quote) { advance(); break; }
            if (c == '\\' && prefix != 'r') {
                advance();
                char e = peek();
                switch (e) {
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    case 'r': value += '\r'; break;
                    case '\\': value += '\\'; break;
                    case '\'': value += '\''; break;
                    case '"': value += '"'; break;
                    default: value += '\\'; value += e; break;
                }
                advance();
            } else {
                value += c;
                advance();
            }
        }
        start.length = col - start.column;
        push(TokenKind::String, value, start);
    }

    void lex_fstring(char quote, SourceSpan start) {
        push(TokenKind::FStringStart, "", start);
        std::string text;
        auto flush_text = [&] {
            if (!text.empty()) {
                push(TokenKind::FStringText, text, here());
                text.clear();
            }
        };
        while (true) {
            if (eof() || peek() == '\n') {
                fail("unterminated f-string", start, std::string(1, quote));
                return;
            }
            char c = peek();
            if (c == quote) { advance(); break; }
            if (c == '\\') {
                advance();
                char e = peek();
                switch (e) {
                    case 'n': text += '\n'; break;
                    case 't': text += '\t'; break;
                    case '\\': text += '\\'; break;
                    case '\'': text += '\''; break;
                    case '"': text += '"'; break;
                    default: text += '\\'; text += e; break;
                }
                advance();
                continue;
            }
            if (c == '{') {
                if (peek(1) == '{') { text += '{'; advance(); advance(); continue; }
                flush_text();
                lex_fstring_expr(quote);
                if (failed) return;
                continue;
            }
            if (c == '}') {
                if (peek(1) == '}') { text += '}'; advance(); advance(); continue; }
                fail("single '}' in f-string", here(), "}");
                return;
            }
            text += c;
            advance();
        }
        flush_text();
        push(TokenKind::FStringEnd, "", here());
    }

    // Lexes the expression between { and } inside an f-string by scanning for
    // the matching close brace and tokenizing the fragment in place.
    void lex_fstring_expr(char outer_quote) {
        SourceSpan open = here();
        advance(); // consume '{'
        push(TokenKind::FStringExprOpen, "{", open);

        int saved_depth = bracket_depth;
        bracket_depth++; // suppress newline handling while inside
        while (true) {
            if (eof() || peek() == '\n') {
                fail("unterminated expression in f-string", open, "{");
                return;
            }
            char c = peek();
            if (c == '}' && bracket_depth == saved_depth + 1) {
                push(TokenKind::FStringExprClose, "}", here());
                advance();
                bracket_depth = saved_depth;
                return;
            }
            if ((c == ':' || c == '!') && bracket_depth == saved_depth + 1) {
                fail("format specifiers in f-strings are unsupported", here(),
                     std::string(1, c));
                error.unsupported = true;
                return;
            }
            if (c == outer_quote) {
                fail("unterminated expression in f-string", open, "{");
                return;
            }
            lex_one();
            if (failed) return;
        }
    }

    void lex_number() {
        SourceSpan start = here();
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            digits += '.';
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            start.length = static_cast<int>(digits.size());
            push(TokenKind::Float, digits, start);
            return;
        }
        if (is_ident_start(peek())) {
            fail("invalid number literal", start, digits + peek());
            return;
        }
        start.length = static_cast<int>(digits.size());
        push(TokenKind::Integer, digits, start, std::stoll(digits));
    }

    void lex_one() {
        char c = peek();
        SourceSpan span = here();
        if (c == ' ') { advance(); return; }
        if (c == '\r') { advance(); return; }
        if (c == '#') {
            while (!eof() && peek() != '\n') advance();
            return;
        }
        if (c == '\n') {
            advance();
            if (bracket_depth == 0) {
                if (!out.empty() && out.back().kind != TokenKind::Newline &&
                    out.back().kind != TokenKind::Indent &&
                    out.back().kind != TokenKind::Dedent) {
                    push(TokenKind::Newline, "", span);
                }
                at_line_start = true;
            }
            return;
        }
        if (is_ident_start(c)) {
            // string prefixes
            if ((c == 'f' || c == 'r') && (peek(1) == '"' || peek(1) == '\'')) {
                char prefix = c;
                advance();
                lex_string(prefix);
                return;
            }
            std::string name;
            while (is_ident_char(peek())) { name += peek(); advance(); }
            span.length = static_cast<int>(name.size());
            if (kKeywords.count(name)) push(TokenKind::Keyword, name, span);
            else push(TokenKind::Identifier, name, span);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) { lex_number(); return; }
        if (c == '"' || c == '\'') { lex_string(0); return; }

        auto two = [&](const char* op) {
            span.length = 2;
            push(TokenKind::Op, op, span);
            advance(); advance();
        };
        switch (c) {
            case '=':
                if (peek(1) == '=') { two("=="); return; }
                push(TokenKind::Assign, "=", span); advance(); return;
            case '!':
                if (peek(1) == '=') { two("!="); return; }
                fail("illegal character '!'", span, "!"); return;
            case '<':
                if (peek(1) == '=') { two("<="); return; }
                push(TokenKind::Op, "<", span); advance(); return;
            case '>':
                if (peek(1) == '=') { two(">="); return; }
                push(TokenKind::Op, ">", span); advance(); return;
            case '+': case '-': case '*': case '/': case '%':
                if (peek(1) == '=') {
                    fail(std::string("augmented assignment '") + c + "=' is unsupported", span,
                         std::string(1, c) + "=");
                    error.unsupported = true;
                    return;
                }
                push(TokenKind::Op, std::string(1, c), span); advance(); return;
            case '(': bracket_depth++; push(TokenKind::LParen, "(", span); advance(); return;
            case ')': bracket_depth--; push(TokenKind::RParen, ")", span); advance(); return;
            case '[': bracket_depth++; push(TokenKind::LBracket, "[", span); advance(); return;
            case ']': bracket_depth--; push(TokenKind::RBracket, "]", span); advance(); return;
            case '{': bracket_depth++; push(TokenKind::LBrace, "{", span); advance(); return;
            case '}': bracket_depth--; push(TokenKind::RBrace, "}", span); advance(); return;
            case ',': push(TokenKind::Comma, ",", span); advance(); return;
            case ':': push(TokenKind::Colon, ":", span); advance(); return;
            case '.': push(TokenKind::Dot, ".", span); advance(); return;
            case '\t':
                fail("tab character (spaces only)", span, "\\t"); return;
            default:
                fail(std::string("illegal character '") + c + "'", span, std::string(1, c));
                return;
        }
    }

    std::variant<std::vector<Token>, SyntaxDiagnostic> run() {
        while (!eof() && !failed) {
            if (at_line_start && bracket_depth == 0) {
                at_line_start = false;
                if (!handle_indent()) {
                    at_line_start = true;
                    if (eof()) break;
                    continue;
                }
            }
            lex_one();
        }
        if (failed) return error;
        if (!out.empty() && out.back().kind != TokenKind::Newline &&
            out.back().kind != TokenKind::Dedent) {
            push(TokenKind::Newline, "", here());
        }
        while (indent_stack.size() > 1) {
            indent_stack.pop_back();
            push(TokenKind::Dedent, "", here());
        }
        push(TokenKind::EndOfFile, "", here());
        if (failed) return error;
        return out;
    }
};

} // namespace

std::string strip_code_fence(const std::string& source) {
    // Find first non-blank line.
    std::size_t i = 0;
    while (i < source.size() && (source[i] == '\n' || source[i] == '\r' ||
                                 source[i] == ' ' || source[i] == '\t'))
        i++;
    if (source.compare(i, 3, "```") != 0) return source;
    // Drop the opening fence line (``` plus optional language tag).
    std::size_t body_start = source.find('\n', i);
    if (body_start == std::string::npos) return "";
    body_start++;
    // Drop a trailing fence line if present.
    std::size_t end = source.size();
    while (end > body_start && (source[end - 1] == '\n' || source[end - 1] == '\r' ||
                                source[end - 1] == ' '))
        end--;
    std::size_t last_line = source.rfind('\n', end ? end - 1 : 0);
    std::size_t tail_start = last_line == std::string::npos ? body_start : last_line + 1;
    if (tail_start >= body_start && source.compare(tail_start, 3, "```") == 0)
        return source.substr(body_start, tail_start - body_start);
    return source.substr(body_start, end - body_start);
}

std::variant<std::vector<Token>, SyntaxDiagnostic> tokenize(const std::string& source) {
    std::string body = strip_code_fence(source);
    Lexer lexer(body);
    return lexer.run();
}

} // namespace ragexec::dsl
