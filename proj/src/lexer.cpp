#include "swarmlang/lexer.hpp"

#include <array>
#include <cctype>
#include <cstdint>

namespace swarmlang {

namespace {

constexpr std::array<const char*, 20> kKeywords = {
    "class", "extends", "static", "if",     "else", "while",  "for",
    "return", "new",     "this",   "super",  "null", "true",   "false",
    "int",    "boolean", "string", "void",   "Collection", "print",
};

bool isIdentStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool isIdentPart(char c) {
    return isIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}

class Lexer {
public:
    Lexer(const SourceUnit& unit, Diagnostics& diags) : unit_(unit), diags_(diags) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        for (;;) {
            skipTrivia();
            if (atEnd()) break;
            tokens.push_back(next());
        }
        Token eof;
        eof.kind = TokenKind::EndOfInput;
        eof.span = hereSpan();
        tokens.push_back(eof);
        return tokens;
    }

private:
    const SourceUnit& unit_;
    Diagnostics& diags_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool atEnd() const { return pos_ >= unit_.text.size(); }
    char peek() const { return atEnd() ? '\0' : unit_.text[pos_]; }
    char peek2() const { return pos_ + 1 < unit_.text.size() ? unit_.text[pos_ + 1] : '\0'; }

    char advance() {
        char c = unit_.text[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    Span hereSpan() const { return {unit_.path, line_, col_, line_, col_ + 1}; }

    void skipTrivia() {
        while (!atEnd()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek2() == '/') {
                while (!atEnd() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token next() {
        size_t startPos = pos_;
        int startLine = line_;
        int startCol = col_;
        char c = advance();

        auto make = [&](TokenKind kind) {
            Token t;
            t.kind = kind;
            t.lexeme = unit_.text.substr(startPos, pos_ - startPos);
            t.span = {unit_.path, startLine, startCol, line_, col_};
            return t;
        };
        auto fail = [&](const std::string& msg) {
            diags_.error("E001", msg, {unit_.path, startLine, startCol, line_, col_});
            return make(TokenKind::Punctuation);
        };

        if (isIdentStart(c)) {
            while (!atEnd() && isIdentPart(peek())) advance();
            Token t = make(TokenKind::Identifier);
            if (isSwarmKeyword(t.lexeme)) t.kind = TokenKind::Keyword;
            return t;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
            Token t = make(TokenKind::IntegerLiteral);
            // Literals must fit in a signed 64-bit value; unary minus is a
            // separate token, so INT64_MIN is not writable as a literal.
            uint64_t value = 0;
            bool overflow = false;
            for (char d : t.lexeme) {
                value = value * 10 + static_cast<uint64_t>(d - '0');
                if (value > static_cast<uint64_t>(INT64_MAX)) {
                    overflow = true;
                    break;
                }
            }
            if (overflow) {
                diags_.error("E001", "integer literal too large: " + t.lexeme, t.span);
            }
            return t;
        }

        if (c == '"') {
            while (!atEnd() && peek() != '"' && peek() != '\n') {
                if (peek() == '\\') {
                    advance();
                    if (atEnd()) break;
                    char esc = peek();
                    if (esc != 'n' && esc != 't' && esc != '\\' && esc != '"') {
                        diags_.error("E001", std::string("invalid escape sequence: \\") + esc,
                                     {unit_.path, line_, col_ - 1, line_, col_ + 1});
                    }
                }
                advance();
            }
            if (atEnd() || peek() != '"') {
                return fail("unterminated string literal");
            }
            advance();  // closing quote
            return make(TokenKind::StringLiteral);
        }

        if (c == '@') {
            if (!atEnd() && isIdentStart(peek())) {
                while (!atEnd() && isIdentPart(peek())) advance();
                Token t = make(TokenKind::AnnotationMarker);
                if (t.lexeme != "@group") {
                    diags_.error("E001", "unknown annotation '" + t.lexeme + "'; only @group is recognized",
                                 t.span);
                }
                return t;
            }
            return fail("stray '@'");
        }

        switch (c) {
            case '{': case '}': case '(': case ')': case ',': case ';': case '.':
            case ':': case '+': case '*': case '/':
                return make(TokenKind::Punctuation);
            case '-':
                return make(TokenKind::Punctuation);
            case '<': case '>': case '=': case '!':
                if (peek() == '=') advance();
                return make(TokenKind::Punctuation);
            case '&':
                if (peek() == '&') {
                    advance();
                    return make(TokenKind::Punctuation);
                }
                return fail("expected '&&'");
            case '|':
                if (peek() == '|') {
                    advance();
                    return make(TokenKind::Punctuation);
                }
                return fail("expected '||'");
            default:
                return fail(std::string("unexpected character '") + c + "'");
        }
    }
};

}  // namespace

bool isSwarmKeyword(const std::string& word) {
    for (const char* kw : kKeywords)
        if (word == kw) return true;
    return false;
}

std::vector<Token> tokenize(const SourceUnit& unit, Diagnostics& diags) {
    return Lexer(unit, diags).run();
}

const char* tokenKindName(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::IntegerLiteral: return "integer literal";
        case TokenKind::StringLiteral: return "string literal";
        case TokenKind::Punctuation: return "punctuation";
        case TokenKind::AnnotationMarker: return "annotation marker";
        case TokenKind::EndOfInput: return "end of input";
    }
    return "?";
}

}  // namespace swarmlang
