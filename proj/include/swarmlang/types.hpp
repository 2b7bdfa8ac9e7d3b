#pragma once

#include <string>

namespace swarmlang {

struct ClassSymbol;
struct MethodSymbol;

/// Resolved type of an expression or declaration.
struct TypeRef {
    enum class Kind {
        Invalid,     // attribution failed for this expression
        Int,
        Bool,
        String,
        Void,
        Null,        // type of the `null` literal
        Class,       // cls points at the class
        Collection,  // cls points at the element class
    };

    Kind kind = Kind::Invalid;
    const ClassSymbol* cls = nullptr;

    static TypeRef invalid() { return {}; }
    static TypeRef intType() { return {Kind::Int, nullptr}; }
    static TypeRef boolType() { return {Kind::Bool, nullptr}; }
    static TypeRef stringType() { return {Kind::String, nullptr}; }
    static TypeRef voidType() { return {Kind::Void, nullptr}; }
    static TypeRef nullType() { return {Kind::Null, nullptr}; }
    static TypeRef classType(const ClassSymbol* c) { return {Kind::Class, c}; }
    static TypeRef collectionType(const ClassSymbol* elem) { return {Kind::Collection, elem}; }

    bool isInvalid() const { return kind == Kind::Invalid; }
    bool isClass() const { return kind == Kind::Class; }
    bool isCollection() const { return kind == Kind::Collection; }

    bool operator==(const TypeRef& o) const { return kind == o.kind && cls == o.cls; }
    bool operator!=(const TypeRef& o) const { return !(*this == o); }

    std::string name() const;
};

/// The four collection operations built into the language.
enum class BuiltinSel { Add, Size, IsEmpty, Get };

const char* builtinSelName(BuiltinSel sel);
bool builtinSelFromName(const std::string& name, BuiltinSel& out);

/// How a call site was resolved during attribution.
struct Resolution {
    enum class Kind {
        None,
        Instance,           // ordinary instance call on an object
        Group,              // group call on a collection
        GroupEscape,        // `T.this.m(...)` resolved to a group method
        Super,              // `super.m(...)` / `Q.super.m(...)` in an instance method
        GroupSuper,         // `super.m(...)` in a group method
        BuiltinCollection,  // add/size/isEmpty/get on a collection (also escape fallback)
        DynamicGroup,       // dynamic-elements policy: deferred to runtime
    };

    Kind kind = Kind::None;
    const MethodSymbol* target = nullptr;      // Instance/Group/GroupEscape/Super/GroupSuper
    const ClassSymbol* elementClass = nullptr; // Group: class the group walk started at
    const ClassSymbol* definingClass = nullptr;// Group/GroupEscape/GroupSuper: class where found
    const ClassSymbol* startClass = nullptr;   // Super: class the instance walk started at
    BuiltinSel builtin = BuiltinSel::Add;      // BuiltinCollection
};

}  // namespace swarmlang
