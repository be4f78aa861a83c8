#include "ragexec/dsl/lint.hpp"

#include <unordered_set>

namespace ragexec::dsl {

namespace {

const std::unordered_set<std::string> kKnownNames = {
    "retrieve", "answer", "int", "str", "len", "all", "any", "range", "re",
};

struct Linter {
    std::vector<LintWarning> warnings;
    int retrieve_calls = 0;

    void check_expr(const Expr& e, std::unordered_set<std::string>& assigned) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Identifier>) {
                    if (!assigned.count(n.name) && !kKnownNames.count(n.name))
                        warnings.push_back(
                            {"use-before-assign",
                             "'" + n.name + "' is used before any assignment", e.span});
                } else if constexpr (std::is_same_v<T, FString>) {
                    for (const auto& p : n.parts)
                        if (p.expr) check_expr(*p.expr, assigned);
                } else if constexpr (std::is_same_v<T, Call>) {
                    if (n.callee.size() == 1 && n.callee[0] == "retrieve")
                        retrieve_calls++;
                    if (n.callee.size() == 1 && !kKnownNames.count(n.callee[0]) &&
                        !assigned.count(n.callee[0]))
                        warnings.push_back({"use-before-assign",
                                            "'" + n.callee[0] +
                                                "' is called before any assignment",
                                            e.span});
                    for (const auto& a : n.args) check_expr(*a, assigned);
                    for (const auto& [k, v] : n.kwargs) check_expr(*v, assigned);
                } else if constexpr (std::is_same_v<T, MethodCall>) {
                    check_expr(*n.receiver, assigned);
                    for (const auto& a : n.args) check_expr(*a, assigned);
                } else if constexpr (std::is_same_v<T, Index>) {
                    check_expr(*n.receiver, assigned);
                    check_expr(*n.key, assigned);
                } else if constexpr (std::is_same_v<T, Binary>) {
                    check_expr(*n.lhs, assigned);
                    check_expr(*n.rhs, assigned);
                } else if constexpr (std::is_same_v<T, NotOp>) {
                    check_expr(*n.operand, assigned);
                } else if constexpr (std::is_same_v<T, ListLit>) {
                    for (const auto& item : n.items) check_expr(*item, assigned);
                } else if constexpr (std::is_same_v<T, DictLit>) {
                    for (const auto& [k, v] : n.items) {
                        check_expr(*k, assigned);
                        check_expr(*v, assigned);
                    }
                } else if constexpr (std::is_same_v<T, Comprehension>) {
                    check_expr(*n.iterable, assigned);
                    auto inner = assigned;
                    for (const auto& v : n.loop_vars) inner.insert(v);
                    if (n.condition) check_expr(*n.condition, inner);
                    if (n.is_dict) {
                        check_expr(*n.key, inner);
                        check_expr(*n.value, inner);
                    } else {
                        check_expr(*n.element, inner);
                    }
                } else if constexpr (std::is_same_v<T, Conditional>) {
                    check_expr(*n.condition, assigned);
                    check_expr(*n.then_value, assigned);
                    check_expr(*n.else_value, assigned);
                }
            },
            e.node);
    }

    void check_block(const std::vector<StmtPtr>& body,
                     std::unordered_set<std::string>& assigned) {
        for (const auto& sp : body) {
            const Stmt& s = *sp;
            std::visit(
                [&](const auto& n) {
                    using T = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<T, Assignment>) {
                        check_expr(*n.value, assigned);
                        if (auto* id = std::get_if<Identifier>(&n.target->node))
                            assigned.insert(id->name);
                        else
                            check_expr(*n.target, assigned);
                    } else if constexpr (std::is_same_v<T, ForLoop>) {
                        check_expr(*n.iterable, assigned);
                        for (const auto& v : n.loop_vars) assigned.insert(v);
                        check_block(n.body, assigned);
                    } else if constexpr (std::is_same_v<T, IfStmt>) {
                        // straight-line approximation: names assigned in any arm
                        // count as assigned afterwards
                        for (const auto& arm : n.arms) {
                            check_expr(*arm.condition, assigned);
                            check_block(arm.body, assigned);
                        }
                        check_block(n.else_body, assigned);
                    } else if constexpr (std::is_same_v<T, FunctionDef>) {
                        auto local = assigned;
                        for (const auto& p : n.params) local.insert(p);
                        check_block(n.body, local);
                        assigned.insert(n.name);
                    } else if constexpr (std::is_same_v<T, ReturnStmt>) {
                        if (n.value) check_expr(*n.value, assigned);
                    } else if constexpr (std::is_same_v<T, ExpressionStmt>) {
                        check_expr(*n.expr, assigned);
                    }
                },
                s.node);
        }
    }
};

// True when the statement assigns final/final_answer from an answer() call.
bool is_answer_assignment(const Stmt& s, bool* is_fstring_final) {
    const auto* assign = std::get_if<Assignment>(&s.node);
    if (!assign) return false;
    const auto* id = std::get_if<Identifier>(&assign->target->node);
    if (!id || (id->name != "final" && id->name != "final_answer")) return false;
    if (const auto* call = std::get_if<Call>(&assign->value->node))
        if (call->callee.size() == 1 && call->callee[0] == "answer") return true;
    if (std::holds_alternative<FString>(assign->value->node) ||
        std::holds_alternative<TextLit>(assign->value->node))
        *is_fstring_final = true;
    return false;
}

bool assigns_final(const std::vector<StmtPtr>& body) {
    for (const auto& sp : body) {
        if (const auto* assign = std::get_if<Assignment>(&sp->node)) {
            if (const auto* id = std::get_if<Identifier>(&assign->target->node))
                if (id->name == "final" || id->name == "final_answer") return true;
        }
        if (const auto* loop = std::get_if<ForLoop>(&sp->node)) {
            if (assigns_final(loop->body)) return true;
        }
        if (const auto* cond = std::get_if<IfStmt>(&sp->node)) {
            for (const auto& arm : cond->arms)
                if (assigns_final(arm.body)) return true;
            if (assigns_final(cond->else_body)) return true;
        }
    }
    return false;
}

} // namespace

std::vector<LintWarning> lint_program(const PlanProgram& program) {
    Linter linter;
    std::unordered_set<std::string> assigned;
    linter.check_block(program.statements, assigned);

    if (!assigns_final(program.statements)) {
        linter.warnings.push_back(
            {"no-terminal-answer",
             "program never assigns final_answer or final", SourceSpan{1, 1, 0}});
    } else if (!program.statements.empty()) {
        bool fstring_final = false;
        const Stmt& last = *program.statements.back();
        if (!is_answer_assignment(last, &fstring_final) && fstring_final)
            linter.warnings.push_back(
                {"fstring-final",
                 "final answer should be the return value of an answer() call, not "
                 "an f-string or string literal",
                 last.span});
    }

    if (linter.retrieve_calls == 0)
        linter.warnings.push_back(
            {"no-retrieve", "program issues no retrieve() call", SourceSpan{1, 1, 0}});
    else if (linter.retrieve_calls == 1)
        linter.warnings.push_back(
            {"single-retrieve",
             "program issues only one retrieve() call; multi-part questions "
             "usually need more",
             SourceSpan{1, 1, 0}});

    return linter.warnings;
}

} // namespace ragexec::dsl
