#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ragexec/span.hpp"

namespace ragexec::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Stmt;
using StmtPtr = std::shared_ptr<Stmt>;

enum class BinOp {
    Add, Sub, Mul,
    Eq, Ne, Lt, Gt, Le, Ge,
    And, Or, In,
};

std::string to_string(BinOp op);

// --- expressions -----------------------------------------------------------

struct TextLit { std::string value; };
struct IntLit { long long value = 0; };
struct BoolLit { bool value = false; };
struct NoneLit {};
struct ListLit { std::vector<ExprPtr> items; };
struct DictLit { std::vector<std::pair<ExprPtr, ExprPtr>> items; };
struct Identifier { std::string name; };

// Alternating literal text and embedded expressions.
struct FString {
    struct Part {
        std::string text; // literal segment; empty when expr is set
        ExprPtr expr;     // embedded expression, null for literal segments
    };
    std::vector<Part> parts;
};

// callee is a plain name or a dotted path such as re.search
struct Call {
    std::vector<std::string> callee;
    std::vector<ExprPtr> args;
    std::vector<std::pair<std::string, ExprPtr>> kwargs;
};

struct MethodCall {
    ExprPtr receiver;
    std::string method;
    std::vector<ExprPtr> args;
};

struct Index {
    ExprPtr receiver;
    ExprPtr key;
};

struct Binary {
    BinOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct NotOp { ExprPtr operand; };

// [elem for var in iterable if cond] / {key: value for var in iterable if cond}
// Generator arguments to all()/any() are normalized to this form at parse time.
struct Comprehension {
    ExprPtr element;              // list form
    ExprPtr key, value;           // dict form (element is null)
    std::vector<std::string> loop_vars;
    ExprPtr iterable;
    ExprPtr condition;            // optional
    bool is_dict = false;
};

// then_value if condition else else_value
struct Conditional {
    ExprPtr then_value;
    ExprPtr condition;
    ExprPtr else_value;
};

struct Expr {
    std::variant<TextLit, IntLit, BoolLit, NoneLit, ListLit, DictLit, Identifier,
                 FString, Call, MethodCall, Index, Binary, NotOp, Comprehension,
                 Conditional>
        node;
    SourceSpan span;
};

// --- statements ------------------------------------------------------------

// target is an Identifier or an Index chain (flags[film][pred] = ...)
struct Assignment {
    ExprPtr target;
    ExprPtr value;
};

struct ForLoop {
    std::vector<std::string> loop_vars;
    ExprPtr iterable;
    std::vector<StmtPtr> body;
};

struct IfStmt {
    struct Arm {
        ExprPtr condition;
        std::vector<StmtPtr> body;
    };
    std::vector<Arm> arms;            // if + elif chain
    std::vector<StmtPtr> else_body;   // may be empty
};

struct FunctionDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<StmtPtr> body;
};

struct ReturnStmt { ExprPtr value; };

struct ExpressionStmt { ExprPtr expr; };

struct Import { std::string module; };

struct Stmt {
    std::variant<Assignment, ForLoop, IfStmt, FunctionDef, ReturnStmt,
                 ExpressionStmt, Import>
        node;
    SourceSpan span;
    std::string source_line; // first physical line of the statement, for traces
};

struct PlanProgram {
    std::vector<StmtPtr> statements;
    std::string source;
};

} // namespace ragexec::dsl
