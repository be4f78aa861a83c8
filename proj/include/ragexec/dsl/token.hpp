#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ragexec/span.hpp"

namespace ragexec::dsl {

enum class TokenKind {
    Identifier,
    Keyword,      // for, in, if, elif, else, def, return, import, and, or, not, True, False, None
    Integer,
    Float,        // lexed so the parser can reject it as unsupported
    String,       // plain or raw string literal (already unescaped)
    FStringStart, // f" — followed by FStringText / FStringExprOpen ... FStringEnd
    FStringText,
    FStringExprOpen,  // {
    FStringExprClose, // }
    FStringEnd,
    Assign,       // =
    Op,           // + - * == != < > <= >= / % etc. (validity decided by parser)
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Dot,
    Newline,
    Indent,
    Dedent,
    EndOfFile,
};

struct Token {
    TokenKind kind;
    std::string text;
    long long int_value = 0;
    SourceSpan span;
};

struct SyntaxDiagnostic {
    std::string message;
    SourceSpan span;
    std::string offending_fragment;
    bool unsupported = false; // well-formed but outside the accepted subset
};

// Removes a surrounding ``` fence (with optional language tag) if present.
// Idempotent: stripping twice equals stripping once.
std::string strip_code_fence(const std::string& source);

// Tokenizes the full source, resolving indentation into Indent/Dedent tokens.
// Returns either the token stream or a diagnostic; never throws.
std::variant<std::vector<Token>, SyntaxDiagnostic> tokenize(const std::string& source);

} // namespace ragexec::dsl
