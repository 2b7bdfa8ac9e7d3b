#include "swarmlang/ast.hpp"

namespace swarmlang {

namespace {

std::vector<ExprPtr> cloneAll(const std::vector<ExprPtr>& exprs) {
    std::vector<ExprPtr> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(e->clone());
    return out;
}

}  // namespace

std::unique_ptr<TypeExpr> TypeExpr::clone() const {
    auto t = std::make_unique<TypeExpr>();
    t->span = span;
    t->isCollection = isCollection;
    t->name = name;
    if (element) t->element = element->clone();
    return t;
}

ExprPtr IntLitExpr::clone() const { return std::make_unique<IntLitExpr>(value, span); }
ExprPtr BoolLitExpr::clone() const { return std::make_unique<BoolLitExpr>(value, span); }
ExprPtr StrLitExpr::clone() const { return std::make_unique<StrLitExpr>(value, span); }
ExprPtr NullLitExpr::clone() const { return std::make_unique<NullLitExpr>(span); }
ExprPtr IdentExpr::clone() const { return std::make_unique<IdentExpr>(name, span); }
ExprPtr ThisExpr::clone() const { return std::make_unique<ThisExpr>(span); }

ExprPtr FieldAccessExpr::clone() const {
    return std::make_unique<FieldAccessExpr>(object->clone(), field, span);
}

ExprPtr MethodCallExpr::clone() const {
    auto e = std::make_unique<MethodCallExpr>(receiver->clone(), selector, cloneAll(args), span);
    e->res = res;
    return e;
}

ExprPtr GroupThisCallExpr::clone() const {
    auto e = std::make_unique<GroupThisCallExpr>(qualifier, selector, cloneAll(args), span);
    e->res = res;
    return e;
}

ExprPtr SuperCallExpr::clone() const {
    auto e = std::make_unique<SuperCallExpr>(qualifier, selector, cloneAll(args), span);
    e->res = res;
    return e;
}

ExprPtr NewObjectExpr::clone() const {
    auto e = std::make_unique<NewObjectExpr>(className, cloneAll(args), span);
    e->ctor = ctor;
    e->cls = cls;
    return e;
}

ExprPtr NewCollectionExpr::clone() const {
    auto e = std::make_unique<NewCollectionExpr>(elementType->clone(), span);
    e->elementClass = elementClass;
    return e;
}

ExprPtr UnaryExpr::clone() const {
    return std::make_unique<UnaryExpr>(op, operand->clone(), span);
}

ExprPtr BinaryExpr::clone() const {
    return std::make_unique<BinaryExpr>(op, lhs->clone(), rhs->clone(), span);
}

StmtPtr BlockStmt::clone() const { return cloneBlock(); }

std::unique_ptr<BlockStmt> BlockStmt::cloneBlock() const {
    std::vector<StmtPtr> body;
    body.reserve(stmts.size());
    for (const auto& s : stmts) body.push_back(s->clone());
    return std::make_unique<BlockStmt>(std::move(body), span);
}

StmtPtr LocalDeclStmt::clone() const {
    return std::make_unique<LocalDeclStmt>(type->clone(), name, init ? init->clone() : nullptr, span);
}

StmtPtr AssignStmt::clone() const {
    return std::make_unique<AssignStmt>(target->clone(), value->clone(), span);
}

StmtPtr ExprStmt::clone() const { return std::make_unique<ExprStmt>(expr->clone(), span); }

StmtPtr IfStmt::clone() const {
    return std::make_unique<IfStmt>(cond->clone(), thenBlock->cloneBlock(),
                                    elseBlock ? elseBlock->cloneBlock() : nullptr, span);
}

StmtPtr WhileStmt::clone() const {
    return std::make_unique<WhileStmt>(cond->clone(), body->cloneBlock(), span);
}

StmtPtr ForStmt::clone() const {
    auto up = update->clone();
    auto* upAssign = static_cast<AssignStmt*>(up.release());
    return std::make_unique<ForStmt>(init->clone(), cond->clone(),
                                     std::unique_ptr<AssignStmt>(upAssign), body->cloneBlock(), span);
}

StmtPtr ForEachStmt::clone() const {
    return std::make_unique<ForEachStmt>(varType->clone(), varName, subject->clone(),
                                         body->cloneBlock(), span);
}

StmtPtr ReturnStmt::clone() const {
    return std::make_unique<ReturnStmt>(value ? value->clone() : nullptr, span);
}

StmtPtr PrintStmt::clone() const { return std::make_unique<PrintStmt>(value->clone(), span); }

StmtPtr SuperCtorCallStmt::clone() const {
    auto s = std::make_unique<SuperCtorCallStmt>(cloneAll(args), span);
    s->ctor = ctor;
    return s;
}

}  // namespace swarmlang
