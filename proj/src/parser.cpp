#include "swarmlang/parser.hpp"

#include <cstdint>

#include "swarmlang/lexer.hpp"

namespace swarmlang {

namespace {

// Thrown to unwind to the nearest class boundary after a syntax error.
struct ParseAbort {};

Span joinSpans(const Span& a, const Span& b) {
    Span s = a;
    s.endLine = b.endLine;
    s.endCol = b.endCol;
    return s;
}

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::string path, Diagnostics& diags)
        : tokens_(tokens), path_(std::move(path)), diags_(diags) {}

    FileUnit run() {
        FileUnit unit;
        unit.path = path_;
        while (!at(TokenKind::EndOfInput)) {
            try {
                if (!cur().isKeyword("class")) {
                    error("expected 'class'");
                }
                unit.classes.push_back(parseClass());
            } catch (const ParseAbort&) {
                syncToClassBoundary();
            }
        }
        return unit;
    }

private:
    const std::vector<Token>& tokens_;
    std::string path_;
    Diagnostics& diags_;
    size_t pos_ = 0;

    const Token& cur() const { return tokens_[pos_]; }
    const Token& peek(size_t n = 1) const {
        size_t i = pos_ + n;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool at(TokenKind k) const { return cur().kind == k; }

    const Token& advance() {
        const Token& t = cur();
        if (!at(TokenKind::EndOfInput)) ++pos_;
        return t;
    }

    [[noreturn]] void error(const std::string& expected) {
        const Token& t = cur();
        std::string got = t.kind == TokenKind::EndOfInput
                              ? std::string("end of input")
                              : "'" + t.lexeme + "'";
        diags_.error("E002", expected + ", found " + got, t.span);
        throw ParseAbort{};
    }

    const Token& expectPunct(const char* p) {
        if (!cur().isPunct(p)) error(std::string("expected '") + p + "'");
        return advance();
    }

    const Token& expectKeyword(const char* kw) {
        if (!cur().isKeyword(kw)) error(std::string("expected '") + kw + "'");
        return advance();
    }

    std::string expectIdent(const char* what) {
        if (!at(TokenKind::Identifier)) error(std::string("expected ") + what);
        return advance().lexeme;
    }

    void syncToClassBoundary() {
        int depth = 0;
        while (!at(TokenKind::EndOfInput)) {
            if (cur().isPunct("{")) ++depth;
            if (cur().isPunct("}")) --depth;
            if (cur().isKeyword("class") && depth <= 0) return;
            advance();
        }
    }

    // -- declarations --------------------------------------------------------

    ClassDecl parseClass() {
        ClassDecl decl;
        Span start = cur().span;
        expectKeyword("class");
        decl.name = expectIdent("class name");
        if (cur().isKeyword("extends")) {
            advance();
            decl.superName = expectIdent("superclass name");
        }
        expectPunct("{");
        while (!cur().isPunct("}") && !at(TokenKind::EndOfInput)) {
            parseMember(decl);
        }
        const Token& close = expectPunct("}");
        decl.span = joinSpans(start, close.span);
        return decl;
    }

    void parseMember(ClassDecl& decl) {
        Span groupSpan;
        bool isGroup = false;
        if (at(TokenKind::AnnotationMarker)) {
            groupSpan = cur().span;
            isGroup = true;
            advance();
        }
        bool isStatic = false;
        if (cur().isKeyword("static")) {
            if (isGroup) {
                diags_.error("E003", "@group cannot be applied to a static method", groupSpan);
            }
            isStatic = true;
            advance();
        }

        // Constructor: `Name(...)` with the class name and no return type.
        if (at(TokenKind::Identifier) && cur().lexeme == decl.name && peek().isPunct("(")) {
            if (isGroup) {
                diags_.error("E003", "@group cannot be applied to a constructor", groupSpan);
            }
            if (isStatic) error("constructors cannot be static");
            MethodDecl m;
            m.kind = MethodKind::Constructor;
            Span start = cur().span;
            m.name = advance().lexeme;
            m.params = parseParams();
            m.body = parseBlock();
            m.span = joinSpans(start, m.body->span);
            decl.methods.push_back(std::move(m));
            return;
        }

        auto type = parseTypeExpr();
        std::string name = expectIdent("member name");
        if (cur().isPunct("(")) {
            MethodDecl m;
            m.kind = isGroup ? MethodKind::Group : (isStatic ? MethodKind::Static : MethodKind::Instance);
            m.groupMarkerSpan = groupSpan;
            m.name = name;
            Span start = isGroup ? groupSpan : type->span;
            m.returnType = std::move(type);
            m.params = parseParams();
            m.body = parseBlock();
            m.span = joinSpans(start, m.body->span);
            decl.methods.push_back(std::move(m));
        } else {
            if (isGroup || isStatic) error("expected '(' after method name");
            FieldDecl f;
            Span start = type->span;
            f.type = std::move(type);
            f.name = name;
            const Token& semi = expectPunct(";");
            f.span = joinSpans(start, semi.span);
            decl.fields.push_back(std::move(f));
        }
    }

    std::vector<ParamDecl> parseParams() {
        expectPunct("(");
        std::vector<ParamDecl> params;
        if (!cur().isPunct(")")) {
            for (;;) {
                ParamDecl p;
                p.type = parseTypeExpr();
                Span start = p.type->span;
                p.name = expectIdent("parameter name");
                p.span = joinSpans(start, tokens_[pos_ - 1].span);
                params.push_back(std::move(p));
                if (!cur().isPunct(",")) break;
                advance();
            }
        }
        expectPunct(")");
        return params;
    }

    std::unique_ptr<TypeExpr> parseTypeExpr() {
        auto t = std::make_unique<TypeExpr>();
        const Token& tok = cur();
        if (tok.isKeyword("Collection")) {
            advance();
            expectPunct("<");
            t->isCollection = true;
            t->name = "Collection";
            t->element = parseTypeExpr();
            const Token& close = expectPunct(">");
            t->span = joinSpans(tok.span, close.span);
            return t;
        }
        if (tok.isKeyword("int") || tok.isKeyword("boolean") || tok.isKeyword("string") ||
            tok.isKeyword("void") || tok.kind == TokenKind::Identifier) {
            t->name = tok.lexeme;
            t->span = tok.span;
            advance();
            return t;
        }
        error("expected a type");
    }

    bool atTypeKeyword() const {
        return cur().isKeyword("int") || cur().isKeyword("boolean") || cur().isKeyword("string") ||
               cur().isKeyword("Collection");
    }

    // -- statements ----------------------------------------------------------

    std::unique_ptr<BlockStmt> parseBlock() {
        const Token& open = expectPunct("{");
        std::vector<StmtPtr> stmts;
        while (!cur().isPunct("}") && !at(TokenKind::EndOfInput)) {
            stmts.push_back(parseStmt());
        }
        const Token& close = expectPunct("}");
        return std::make_unique<BlockStmt>(std::move(stmts), joinSpans(open.span, close.span));
    }

    StmtPtr parseStmt() {
        const Token& tok = cur();
        if (tok.isKeyword("if")) return parseIf();
        if (tok.isKeyword("while")) return parseWhile();
        if (tok.isKeyword("for")) return parseFor();
        if (tok.isKeyword("return")) return parseReturn();
        if (tok.isKeyword("print")) return parsePrint();
        if (tok.isKeyword("super") && peek().isPunct("(")) return parseSuperCtorCall();
        if (atTypeKeyword() || (at(TokenKind::Identifier) && peek().kind == TokenKind::Identifier)) {
            StmtPtr s = parseLocalDecl();
            expectPunct(";");
            return s;
        }
        return parseExprOrAssign();
    }

    StmtPtr parseIf() {
        Span start = advance().span;  // 'if'
        expectPunct("(");
        ExprPtr cond = parseExpr();
        expectPunct(")");
        auto thenBlock = parseBlock();
        std::unique_ptr<BlockStmt> elseBlock;
        Span end = thenBlock->span;
        if (cur().isKeyword("else")) {
            advance();
            elseBlock = parseBlock();
            end = elseBlock->span;
        }
        return std::make_unique<IfStmt>(std::move(cond), std::move(thenBlock), std::move(elseBlock),
                                        joinSpans(start, end));
    }

    StmtPtr parseWhile() {
        Span start = advance().span;
        expectPunct("(");
        ExprPtr cond = parseExpr();
        expectPunct(")");
        auto body = parseBlock();
        Span end = body->span;
        return std::make_unique<WhileStmt>(std::move(cond), std::move(body), joinSpans(start, end));
    }

    StmtPtr parseFor() {
        Span start = advance().span;  // 'for'
        expectPunct("(");
        // For-each: `for (Type name : expr)`.
        bool isForEach = false;
        {
            size_t save = pos_;
            try {
                auto t = parseTypeExpr();
                (void)t;
                if (at(TokenKind::Identifier) && peek().isPunct(":")) isForEach = true;
            } catch (const ParseAbort&) {
            }
            pos_ = save;
        }
        if (isForEach) {
            auto varType = parseTypeExpr();
            std::string name = expectIdent("loop variable name");
            expectPunct(":");
            ExprPtr subject = parseExpr();
            expectPunct(")");
            auto body = parseBlock();
            Span end = body->span;
            return std::make_unique<ForEachStmt>(std::move(varType), std::move(name),
                                                 std::move(subject), std::move(body),
                                                 joinSpans(start, end));
        }
        StmtPtr init;
        if (atTypeKeyword() || (at(TokenKind::Identifier) && peek().kind == TokenKind::Identifier)) {
            init = parseLocalDecl();
        } else {
            init = parseAssignNoSemi();
        }
        expectPunct(";");
        ExprPtr cond = parseExpr();
        expectPunct(";");
        StmtPtr updateStmt = parseAssignNoSemi();
        auto* updateRaw = static_cast<AssignStmt*>(updateStmt.release());
        std::unique_ptr<AssignStmt> update(updateRaw);
        expectPunct(")");
        auto body = parseBlock();
        Span end = body->span;
        return std::make_unique<ForStmt>(std::move(init), std::move(cond), std::move(update),
                                         std::move(body), joinSpans(start, end));
    }

    StmtPtr parseReturn() {
        Span start = advance().span;
        ExprPtr value;
        if (!cur().isPunct(";")) value = parseExpr();
        const Token& semi = expectPunct(";");
        return std::make_unique<ReturnStmt>(std::move(value), joinSpans(start, semi.span));
    }

    StmtPtr parsePrint() {
        Span start = advance().span;
        expectPunct("(");
        ExprPtr value = parseExpr();
        expectPunct(")");
        const Token& semi = expectPunct(";");
        return std::make_unique<PrintStmt>(std::move(value), joinSpans(start, semi.span));
    }

    StmtPtr parseSuperCtorCall() {
        Span start = advance().span;  // 'super'
        std::vector<ExprPtr> args = parseArgs();
        const Token& semi = expectPunct(";");
        return std::make_unique<SuperCtorCallStmt>(std::move(args), joinSpans(start, semi.span));
    }

    StmtPtr parseLocalDecl() {
        auto type = parseTypeExpr();
        Span start = type->span;
        std::string name = expectIdent("variable name");
        ExprPtr init;
        Span end = tokens_[pos_ - 1].span;
        if (cur().isPunct("=")) {
            advance();
            init = parseExpr();
            end = init->span;
        }
        return std::make_unique<LocalDeclStmt>(std::move(type), std::move(name), std::move(init),
                                               joinSpans(start, end));
    }

    StmtPtr parseAssignNoSemi() {
        ExprPtr target = parseExpr();
        if (!cur().isPunct("=")) error("expected '=' in assignment");
        advance();
        ExprPtr value = parseExpr();
        if (target->kind != ExprKind::Ident && target->kind != ExprKind::FieldAccess) {
            diags_.error("E002", "assignment target must be a variable or a field", target->span);
            throw ParseAbort{};
        }
        Span span = joinSpans(target->span, value->span);
        return std::make_unique<AssignStmt>(std::move(target), std::move(value), span);
    }

    StmtPtr parseExprOrAssign() {
        ExprPtr expr = parseExpr();
        if (cur().isPunct("=")) {
            advance();
            ExprPtr value = parseExpr();
            if (expr->kind != ExprKind::Ident && expr->kind != ExprKind::FieldAccess) {
                diags_.error("E002", "assignment target must be a variable or a field", expr->span);
                throw ParseAbort{};
            }
            Span span = joinSpans(expr->span, value->span);
            const Token& semi = expectPunct(";");
            return std::make_unique<AssignStmt>(std::move(expr), std::move(value),
                                                joinSpans(span, semi.span));
        }
        if (expr->kind != ExprKind::MethodCall && expr->kind != ExprKind::GroupThisCall &&
            expr->kind != ExprKind::SuperCall && expr->kind != ExprKind::NewObject &&
            expr->kind != ExprKind::NewCollection) {
            diags_.error("E002", "only calls and object creations can stand as statements",
                         expr->span);
            throw ParseAbort{};
        }
        const Token& semi = expectPunct(";");
        Span span = joinSpans(expr->span, semi.span);
        return std::make_unique<ExprStmt>(std::move(expr), span);
    }

    // -- expressions ---------------------------------------------------------

    std::vector<ExprPtr> parseArgs() {
        expectPunct("(");
        std::vector<ExprPtr> args;
        if (!cur().isPunct(")")) {
            for (;;) {
                args.push_back(parseExpr());
                if (!cur().isPunct(",")) break;
                advance();
            }
        }
        expectPunct(")");
        return args;
    }

    ExprPtr parseExpr() { return parseOr(); }

    ExprPtr parseOr() {
        ExprPtr lhs = parseAnd();
        while (cur().isPunct("||")) {
            advance();
            ExprPtr rhs = parseAnd();
            Span span = joinSpans(lhs->span, rhs->span);
            lhs = std::make_unique<BinaryExpr>(BinaryOp::Or, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    ExprPtr parseAnd() {
        ExprPtr lhs = parseEquality();
        while (cur().isPunct("&&")) {
            advance();
            ExprPtr rhs = parseEquality();
            Span span = joinSpans(lhs->span, rhs->span);
            lhs = std::make_unique<BinaryExpr>(BinaryOp::And, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    ExprPtr parseEquality() {
        ExprPtr lhs = parseRelational();
        for (;;) {
            BinaryOp op;
            if (cur().isPunct("==")) op = BinaryOp::Eq;
            else if (cur().isPunct("!=")) op = BinaryOp::Ne;
            else break;
            advance();
            ExprPtr rhs = parseRelational();
            Span span = joinSpans(lhs->span, rhs->span);
            lhs = std::make_unique<BinaryExpr>(op, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    ExprPtr parseRelational() {
        ExprPtr lhs = parseAdditive();
        for (;;) {
            BinaryOp op;
            if (cur().isPunct("<")) op = BinaryOp::Lt;
            else if (cur().isPunct("<=")) op = BinaryOp::Le;
            else if (cur().isPunct(">")) op = BinaryOp::Gt;
            else if (cur().isPunct(">=")) op = BinaryOp::Ge;
            else break;
            advance();
            ExprPtr rhs = parseAdditive();
            Span span = joinSpans(lhs->span, rhs->span);
            lhs = std::make_unique<BinaryExpr>(op, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    ExprPtr parseAdditive() {
        ExprPtr lhs = parseMultiplicative();
        for (;;) {
            BinaryOp op;
            if (cur().isPunct("+")) op = BinaryOp::Add;
            else if (cur().isPunct("-")) op = BinaryOp::Sub;
            else break;
            advance();
            ExprPtr rhs = parseMultiplicative();
            Span span = joinSpans(lhs->span, rhs->span);
            lhs = std::make_unique<BinaryExpr>(op, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    ExprPtr parseMultiplicative() {
        ExprPtr lhs = parseUnary();
        for (;;) {
            BinaryOp op;
            if (cur().isPunct("*")) op = BinaryOp::Mul;
            else if (cur().isPunct("/")) op = BinaryOp::Div;
            else break;
            advance();
            ExprPtr rhs = parseUnary();
            Span span = joinSpans(lhs->span, rhs->span);
            lhs = std::make_unique<BinaryExpr>(op, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    ExprPtr parseUnary() {
        if (cur().isPunct("-")) {
            Span start = advance().span;
            ExprPtr operand = parseUnary();
            Span span = joinSpans(start, operand->span);
            return std::make_unique<UnaryExpr>(UnaryOp::Neg, std::move(operand), span);
        }
        if (cur().isPunct("!")) {
            Span start = advance().span;
            ExprPtr operand = parseUnary();
            Span span = joinSpans(start, operand->span);
            return std::make_unique<UnaryExpr>(UnaryOp::Not, std::move(operand), span);
        }
        return parsePostfix();
    }

    ExprPtr parsePostfix() {
        ExprPtr expr = parsePrimary();
        while (cur().isPunct(".")) {
            advance();
            std::string name = expectIdent("member name");
            if (cur().isPunct("(")) {
                std::vector<ExprPtr> args = parseArgs();
                Span span = joinSpans(expr->span, tokens_[pos_ - 1].span);
                expr = std::make_unique<MethodCallExpr>(std::move(expr), std::move(name),
                                                        std::move(args), span);
            } else {
                Span span = joinSpans(expr->span, tokens_[pos_ - 1].span);
                expr = std::make_unique<FieldAccessExpr>(std::move(expr), std::move(name), span);
            }
        }
        return expr;
    }

    ExprPtr parsePrimary() {
        const Token& tok = cur();
        if (tok.kind == TokenKind::IntegerLiteral) {
            advance();
            int64_t value = 0;
            for (char d : tok.lexeme) value = value * 10 + (d - '0');
            return std::make_unique<IntLitExpr>(value, tok.span);
        }
        if (tok.kind == TokenKind::StringLiteral) {
            advance();
            return std::make_unique<StrLitExpr>(decodeString(tok.lexeme), tok.span);
        }
        if (tok.isKeyword("true") || tok.isKeyword("false")) {
            advance();
            return std::make_unique<BoolLitExpr>(tok.lexeme == "true", tok.span);
        }
        if (tok.isKeyword("null")) {
            advance();
            return std::make_unique<NullLitExpr>(tok.span);
        }
        if (tok.isKeyword("this")) {
            advance();
            return std::make_unique<ThisExpr>(tok.span);
        }
        if (tok.isKeyword("super")) {
            advance();
            expectPunct(".");
            std::string sel = expectIdent("method name");
            std::vector<ExprPtr> args = parseArgs();
            Span span = joinSpans(tok.span, tokens_[pos_ - 1].span);
            return std::make_unique<SuperCallExpr>("", std::move(sel), std::move(args), span);
        }
        if (tok.isKeyword("new")) {
            advance();
            if (cur().isKeyword("Collection")) {
                auto elem = parseCollectionTypeArg(tok.span);
                expectPunct("(");
                const Token& close = expectPunct(")");
                Span span = joinSpans(tok.span, close.span);
                return std::make_unique<NewCollectionExpr>(std::move(elem), span);
            }
            std::string name = expectIdent("class name");
            std::vector<ExprPtr> args = parseArgs();
            Span span = joinSpans(tok.span, tokens_[pos_ - 1].span);
            return std::make_unique<NewObjectExpr>(std::move(name), std::move(args), span);
        }
        if (tok.isPunct("(")) {
            advance();
            ExprPtr inner = parseExpr();
            expectPunct(")");
            return inner;
        }
        if (tok.kind == TokenKind::Identifier) {
            // `T.this.m(...)` and `Q.super.m(...)` are recognized here; other
            // dotted forms fall through to the postfix loop.
            if (peek().isPunct(".") && peek(2).isKeyword("this")) {
                advance();  // qualifier
                advance();  // '.'
                advance();  // 'this'
                expectPunct(".");
                std::string sel = expectIdent("method name");
                std::vector<ExprPtr> args = parseArgs();
                Span span = joinSpans(tok.span, tokens_[pos_ - 1].span);
                return std::make_unique<GroupThisCallExpr>(tok.lexeme, std::move(sel),
                                                           std::move(args), span);
            }
            if (peek().isPunct(".") && peek(2).isKeyword("super")) {
                advance();  // qualifier
                advance();  // '.'
                advance();  // 'super'
                expectPunct(".");
                std::string sel = expectIdent("method name");
                std::vector<ExprPtr> args = parseArgs();
                Span span = joinSpans(tok.span, tokens_[pos_ - 1].span);
                return std::make_unique<SuperCallExpr>(tok.lexeme, std::move(sel), std::move(args),
                                                       span);
            }
            advance();
            return std::make_unique<IdentExpr>(tok.lexeme, tok.span);
        }
        error("expected an expression");
    }

    std::unique_ptr<TypeExpr> parseCollectionTypeArg(const Span&) {
        // cur() is the `Collection` keyword.
        expectKeyword("Collection");
        expectPunct("<");
        auto elem = parseTypeExpr();
        expectPunct(">");
        return elem;
    }

    static std::string decodeString(const std::string& lexeme) {
        std::string out;
        // Strip quotes, resolve escapes. The lexer already validated them.
        for (size_t i = 1; i + 1 < lexeme.size(); ++i) {
            char c = lexeme[i];
            if (c == '\\' && i + 2 < lexeme.size() + 1) {
                char esc = lexeme[++i];
                switch (esc) {
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case '\\': out += '\\'; break;
                    case '"': out += '"'; break;
                    default: out += esc; break;
                }
            } else {
                out += c;
            }
        }
        return out;
    }
};

}  // namespace

FileUnit parseUnit(const std::vector<Token>& tokens, const std::string& path, Diagnostics& diags) {
    return Parser(tokens, path, diags).run();
}

Program parseProgram(const std::vector<SourceUnit>& units, Diagnostics& diags) {
    Program program;
    for (const auto& unit : units) {
        auto tokens = tokenize(unit, diags);
        program.files.push_back(parseUnit(tokens, unit.path, diags));
    }
    return program;
}

}  // namespace swarmlang
