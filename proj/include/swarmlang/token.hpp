#pragma once

#include <string>
#include <vector>

#include "swarmlang/diag.hpp"

namespace swarmlang {

enum class TokenKind {
    Identifier,
    Keyword,
    IntegerLiteral,
    StringLiteral,
    Punctuation,
    AnnotationMarker,  // `@group`
    EndOfInput,
};

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string lexeme;  // exact source slice (string literals keep their quotes)
    Span span;

    bool is(TokenKind k) const { return kind == k; }
    bool isKeyword(const char* kw) const { return kind == TokenKind::Keyword && lexeme == kw; }
    bool isPunct(const char* p) const { return kind == TokenKind::Punctuation && lexeme == p; }
};

const char* tokenKindName(TokenKind kind);

}  // namespace swarmlang
