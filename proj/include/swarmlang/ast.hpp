#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swarmlang/diag.hpp"
#include "swarmlang/types.hpp"

namespace swarmlang {

// ---------------------------------------------------------------------------
// Type expressions (syntactic, resolved by the symbols pass)

struct TypeExpr {
    Span span;
    bool isCollection = false;
    std::string name;                   // "int", "boolean", "string", "void", or a class name
    std::unique_ptr<TypeExpr> element;  // set iff isCollection

    std::unique_ptr<TypeExpr> clone() const;
};

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind {
    IntLit,
    BoolLit,
    StrLit,
    NullLit,
    Ident,
    This,
    FieldAccess,
    MethodCall,
    GroupThisCall,  // T.this.m(args)
    SuperCall,      // super.m(args) or Q.super.m(args)
    NewObject,
    NewCollection,
    Unary,
    Binary,
};

enum class BinaryOp { Add, Sub, Mul, Div, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
enum class UnaryOp { Neg, Not };

struct Expr {
    ExprKind kind;
    Span span;
    TypeRef type;  // filled by attribution

    explicit Expr(ExprKind k, Span s) : kind(k), span(std::move(s)) {}
    virtual ~Expr() = default;
    virtual std::unique_ptr<Expr> clone() const = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

struct IntLitExpr final : Expr {
    int64_t value;
    IntLitExpr(int64_t v, Span s) : Expr(ExprKind::IntLit, std::move(s)), value(v) {}
    ExprPtr clone() const override;
};

struct BoolLitExpr final : Expr {
    bool value;
    BoolLitExpr(bool v, Span s) : Expr(ExprKind::BoolLit, std::move(s)), value(v) {}
    ExprPtr clone() const override;
};

struct StrLitExpr final : Expr {
    std::string value;  // decoded (no quotes, escapes resolved)
    StrLitExpr(std::string v, Span s) : Expr(ExprKind::StrLit, std::move(s)), value(std::move(v)) {}
    ExprPtr clone() const override;
};

struct NullLitExpr final : Expr {
    explicit NullLitExpr(Span s) : Expr(ExprKind::NullLit, std::move(s)) {}
    ExprPtr clone() const override;
};

struct IdentExpr final : Expr {
    std::string name;
    IdentExpr(std::string n, Span s) : Expr(ExprKind::Ident, std::move(s)), name(std::move(n)) {}
    ExprPtr clone() const override;
};

struct ThisExpr final : Expr {
    explicit ThisExpr(Span s) : Expr(ExprKind::This, std::move(s)) {}
    ExprPtr clone() const override;
};

struct FieldAccessExpr final : Expr {
    ExprPtr object;
    std::string field;
    FieldAccessExpr(ExprPtr obj, std::string f, Span s)
        : Expr(ExprKind::FieldAccess, std::move(s)), object(std::move(obj)), field(std::move(f)) {}
    ExprPtr clone() const override;
};

struct MethodCallExpr final : Expr {
    ExprPtr receiver;
    std::string selector;
    std::vector<ExprPtr> args;
    Resolution res;  // filled by attribution
    MethodCallExpr(ExprPtr recv, std::string sel, std::vector<ExprPtr> a, Span s)
        : Expr(ExprKind::MethodCall, std::move(s)),
          receiver(std::move(recv)),
          selector(std::move(sel)),
          args(std::move(a)) {}
    ExprPtr clone() const override;
};

/// `T.this.m(args)` — skips instance lookup and starts the group walk at T.
struct GroupThisCallExpr final : Expr {
    std::string qualifier;
    std::string selector;
    std::vector<ExprPtr> args;
    Resolution res;
    GroupThisCallExpr(std::string q, std::string sel, std::vector<ExprPtr> a, Span s)
        : Expr(ExprKind::GroupThisCall, std::move(s)),
          qualifier(std::move(q)),
          selector(std::move(sel)),
          args(std::move(a)) {}
    ExprPtr clone() const override;
};

/// `super.m(args)` or `Q.super.m(args)`. The qualified form names the class
/// where the (non-virtual) instance walk starts; plain super starts one above
/// the enclosing class.
struct SuperCallExpr final : Expr {
    std::string qualifier;  // empty for plain super
    std::string selector;
    std::vector<ExprPtr> args;
    Resolution res;
    SuperCallExpr(std::string q, std::string sel, std::vector<ExprPtr> a, Span s)
        : Expr(ExprKind::SuperCall, std::move(s)),
          qualifier(std::move(q)),
          selector(std::move(sel)),
          args(std::move(a)) {}
    ExprPtr clone() const override;
};

struct NewObjectExpr final : Expr {
    std::string className;
    std::vector<ExprPtr> args;
    const MethodSymbol* ctor = nullptr;  // filled by attribution (null for default ctor)
    const ClassSymbol* cls = nullptr;
    NewObjectExpr(std::string name, std::vector<ExprPtr> a, Span s)
        : Expr(ExprKind::NewObject, std::move(s)), className(std::move(name)), args(std::move(a)) {}
    ExprPtr clone() const override;
};

struct NewCollectionExpr final : Expr {
    std::unique_ptr<TypeExpr> elementType;
    const ClassSymbol* elementClass = nullptr;  // filled by attribution
    NewCollectionExpr(std::unique_ptr<TypeExpr> elem, Span s)
        : Expr(ExprKind::NewCollection, std::move(s)), elementType(std::move(elem)) {}
    ExprPtr clone() const override;
};

struct UnaryExpr final : Expr {
    UnaryOp op;
    ExprPtr operand;
    UnaryExpr(UnaryOp o, ExprPtr e, Span s)
        : Expr(ExprKind::Unary, std::move(s)), op(o), operand(std::move(e)) {}
    ExprPtr clone() const override;
};

struct BinaryExpr final : Expr {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
    BinaryExpr(BinaryOp o, ExprPtr l, ExprPtr r, Span s)
        : Expr(ExprKind::Binary, std::move(s)), op(o), lhs(std::move(l)), rhs(std::move(r)) {}
    ExprPtr clone() const override;
};

// ---------------------------------------------------------------------------
// Statements

enum class StmtKind {
    Block,
    LocalDecl,
    Assign,
    ExprStmt,
    If,
    While,
    For,
    ForEach,
    Return,
    Print,
    SuperCtorCall,
};

struct Stmt {
    StmtKind kind;
    Span span;
    explicit Stmt(StmtKind k, Span s) : kind(k), span(std::move(s)) {}
    virtual ~Stmt() = default;
    virtual std::unique_ptr<Stmt> clone() const = 0;
};

using StmtPtr = std::unique_ptr<Stmt>;

struct BlockStmt final : Stmt {
    std::vector<StmtPtr> stmts;
    BlockStmt(std::vector<StmtPtr> body, Span s)
        : Stmt(StmtKind::Block, std::move(s)), stmts(std::move(body)) {}
    StmtPtr clone() const override;
    std::unique_ptr<BlockStmt> cloneBlock() const;
};

struct LocalDeclStmt final : Stmt {
    std::unique_ptr<TypeExpr> type;
    std::string name;
    ExprPtr init;  // may be null
    TypeRef declaredType;  // filled by attribution
    LocalDeclStmt(std::unique_ptr<TypeExpr> t, std::string n, ExprPtr i, Span s)
        : Stmt(StmtKind::LocalDecl, std::move(s)), type(std::move(t)), name(std::move(n)), init(std::move(i)) {}
    StmtPtr clone() const override;
};

struct AssignStmt final : Stmt {
    ExprPtr target;  // IdentExpr or FieldAccessExpr
    ExprPtr value;
    AssignStmt(ExprPtr t, ExprPtr v, Span s)
        : Stmt(StmtKind::Assign, std::move(s)), target(std::move(t)), value(std::move(v)) {}
    StmtPtr clone() const override;
};

struct ExprStmt final : Stmt {
    ExprPtr expr;
    ExprStmt(ExprPtr e, Span s) : Stmt(StmtKind::ExprStmt, std::move(s)), expr(std::move(e)) {}
    StmtPtr clone() const override;
};

struct IfStmt final : Stmt {
    ExprPtr cond;
    std::unique_ptr<BlockStmt> thenBlock;
    std::unique_ptr<BlockStmt> elseBlock;  // may be null
    IfStmt(ExprPtr c, std::unique_ptr<BlockStmt> t, std::unique_ptr<BlockStmt> e, Span s)
        : Stmt(StmtKind::If, std::move(s)), cond(std::move(c)), thenBlock(std::move(t)), elseBlock(std::move(e)) {}
    StmtPtr clone() const override;
};

struct WhileStmt final : Stmt {
    ExprPtr cond;
    std::unique_ptr<BlockStmt> body;
    WhileStmt(ExprPtr c, std::unique_ptr<BlockStmt> b, Span s)
        : Stmt(StmtKind::While, std::move(s)), cond(std::move(c)), body(std::move(b)) {}
    StmtPtr clone() const override;
};

/// `for (init; cond; update) { ... }` — all three clauses are required;
/// the update clause is an assignment.
struct ForStmt final : Stmt {
    StmtPtr init;  // LocalDeclStmt or AssignStmt
    ExprPtr cond;
    std::unique_ptr<AssignStmt> update;
    std::unique_ptr<BlockStmt> body;
    ForStmt(StmtPtr i, ExprPtr c, std::unique_ptr<AssignStmt> u, std::unique_ptr<BlockStmt> b, Span s)
        : Stmt(StmtKind::For, std::move(s)), init(std::move(i)), cond(std::move(c)),
          update(std::move(u)), body(std::move(b)) {}
    StmtPtr clone() const override;
};

struct ForEachStmt final : Stmt {
    std::unique_ptr<TypeExpr> varType;
    std::string varName;
    ExprPtr subject;
    std::unique_ptr<BlockStmt> body;
    TypeRef varTypeRef;  // filled by attribution
    ForEachStmt(std::unique_ptr<TypeExpr> t, std::string n, ExprPtr subj,
                std::unique_ptr<BlockStmt> b, Span s)
        : Stmt(StmtKind::ForEach, std::move(s)), varType(std::move(t)), varName(std::move(n)),
          subject(std::move(subj)), body(std::move(b)) {}
    StmtPtr clone() const override;
};

struct ReturnStmt final : Stmt {
    ExprPtr value;  // may be null
    ReturnStmt(ExprPtr v, Span s) : Stmt(StmtKind::Return, std::move(s)), value(std::move(v)) {}
    StmtPtr clone() const override;
};

struct PrintStmt final : Stmt {
    ExprPtr value;
    PrintStmt(ExprPtr v, Span s) : Stmt(StmtKind::Print, std::move(s)), value(std::move(v)) {}
    StmtPtr clone() const override;
};

/// `super(args);` — only legal as the first statement of a constructor.
struct SuperCtorCallStmt final : Stmt {
    std::vector<ExprPtr> args;
    const MethodSymbol* ctor = nullptr;  // filled by attribution (null for default)
    SuperCtorCallStmt(std::vector<ExprPtr> a, Span s)
        : Stmt(StmtKind::SuperCtorCall, std::move(s)), args(std::move(a)) {}
    StmtPtr clone() const override;
};

// ---------------------------------------------------------------------------
// Declarations

enum class MethodKind { Instance, Group, Static, Constructor };

struct ParamDecl {
    std::unique_ptr<TypeExpr> type;
    std::string name;
    Span span;
};

struct MethodDecl {
    MethodKind kind = MethodKind::Instance;
    std::string name;
    std::vector<ParamDecl> params;
    std::unique_ptr<TypeExpr> returnType;  // null for constructors
    std::unique_ptr<BlockStmt> body;
    Span span;
    Span groupMarkerSpan;  // valid iff kind == Group
};

struct FieldDecl {
    std::unique_ptr<TypeExpr> type;
    std::string name;
    Span span;
};

struct ClassDecl {
    std::string name;
    std::optional<std::string> superName;
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;
    Span span;
    bool synthetic = false;  // set for desugar-generated wrapper classes
};

struct FileUnit {
    std::string path;
    std::vector<ClassDecl> classes;
};

struct Program {
    std::vector<FileUnit> files;
};

}  // namespace swarmlang
