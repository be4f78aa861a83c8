#include "ragexec/interp/interpreter.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace ragexec::interp {

namespace {

using namespace ragexec::dsl;

struct Fault {
    StructuredError error;
};

struct ReturnSignal {
    Value value;
};

[[noreturn]] void fault(ErrorKind kind, std::string message, SourceSpan span = {}) {
    throw Fault{StructuredError{kind, std::move(message), span, ""}};
}

// UTF-8 codepoint boundaries, for len() and string iteration.
std::vector<std::string> utf8_chars(const std::string& s) {
    std::vector<std::string> chars;
    for (std::size_t i = 0; i < s.size();) {
        unsigned char c = s[i];
        std::size_t n = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4;
        n = std::min(n, s.size() - i);
        chars.push_back(s.substr(i, n));
        i += n;
    }
    return chars;
}

struct Env {
    std::vector<std::pair<std::string, Value>> bindings;
    Env* parent = nullptr;

    Value* find(const std::string& name) {
        for (auto& [k, v] : bindings)
            if (k == name) return &v;
        return parent ? parent->find(name) : nullptr;
    }

    void set(const std::string& name, Value value) {
        for (auto& [k, v] : bindings) {
            if (k == name) {
                v = std::move(value);
                return;
            }
        }
        bindings.emplace_back(name, std::move(value));
    }
};

class Interp {
public:
    Interp(const PlanProgram& program, ToolHost& tools, const ExecutionLimits& limits,
           TraceRecorder& recorder)
        : program_(program), tools_(tools), limits_(limits), recorder_(recorder),
          deadline_(std::chrono::steady_clock::now() + limits.wall_clock_budget) {}

    ExecutionOutcome run() {
        ExecutionOutcome outcome;
        try {
            exec_block(program_.statements, global_);
            Value final_value = resolve_final();
            outcome.final_value = final_value;
            if (!final_value.is_null()) outcome.final_answer = render_str(final_value);
        } catch (Fault& f) {
            if (f.error.source_line.empty() && current_stmt_)
                f.error.source_line = current_stmt_->source_line;
            if (f.error.span.line == 0 ||
                (f.error.span.line == 1 && f.error.span.column == 1 &&
                 f.error.span.length == 0)) {
                if (current_stmt_) f.error.span = current_stmt_->span;
            }
            recorder_.add(TraceKind::Error,
                          current_stmt_ ? current_stmt_->source_line : "",
                          f.error.span, {}, f.error.traceback());
            outcome.error = std::move(f.error);
            outcome.final_value = Value::null();
        } catch (ReturnSignal&) {
            StructuredError err{ErrorKind::SyntaxError, "'return' outside function",
                               current_stmt_ ? current_stmt_->span : SourceSpan{},
                               current_stmt_ ? current_stmt_->source_line : ""};
            recorder_.add(TraceKind::Error, err.source_line, err.span, {},
                          err.traceback());
            outcome.error = std::move(err);
        }
        return outcome;
    }

private:
    const PlanProgram& program_;
    ToolHost& tools_;
    const ExecutionLimits& limits_;
    TraceRecorder& recorder_;
    std::chrono::steady_clock::time_point deadline_;
    Env global_;
    const Stmt* current_stmt_ = nullptr;
    int statements_executed_ = 0;
    int tool_calls_ = 0;
    int call_depth_ = 0;
    Value last_answer_value_;

    Value resolve_final() {
        if (Value* v = global_.find("final_answer")) return *v;
        if (Value* v = global_.find("final")) return *v;
        return last_answer_value_;
    }

    void tick(const Stmt& stmt) {
        if (++statements_executed_ > limits_.max_statements)
            fault(ErrorKind::BudgetExceeded,
                  "statement budget exceeded (" +
                      std::to_string(limits_.max_statements) + ")",
                  stmt.span);
        if (std::chrono::steady_clock::now() > deadline_)
            fault(ErrorKind::Timeout, "wall-clock budget exceeded", stmt.span);
    }

    void charge_tool_call(const char* which, SourceSpan span) {
        if (++tool_calls_ > limits_.max_tool_calls)
            fault(ErrorKind::BudgetExceeded,
                  std::string("tool-call budget exceeded (") +
                      std::to_string(limits_.max_tool_calls) + ") at " + which + "()",
                  span);
    }

    // --- statements --------------------------------------------------------

    void exec_block(const std::vector<StmtPtr>& body, Env& env) {
        for (const auto& stmt : body) exec_stmt(*stmt, env);
    }

    void exec_stmt(const Stmt& stmt, Env& env) {
        const Stmt* prev = current_stmt_;
        current_stmt_ = &stmt;
        tick(stmt);
        std::visit([&](const auto& node) { exec(node, stmt, env); }, stmt.node);
        current_stmt_ = prev;
    }

    void exec(const Assignment& node, const Stmt& stmt, Env& env) {
        Value value = eval(*node.value, env);
        assign_target(*node.target, value, env);
        recorder_.add(TraceKind::Assign, stmt.source_line, stmt.span, {},
                      render_repr(value));
    }

    void assign_target(const Expr& target, Value value, Env& env) {
        if (const auto* id = std::get_if<Identifier>(&target.node)) {
            env.set(id->name, std::move(value));
            return;
        }
        const auto& index = std::get<Index>(target.node);
        Value receiver = eval(*index.receiver, env);
        Value key = eval(*index.key, env);
        if (receiver.is_mapping()) {
            if (!key.is_text())
                fault(ErrorKind::TypeError,
                      "mapping keys must be str, not " + key.type_name(), target.span);
            if (Value* slot = receiver.as_mapping()->find(key.as_text()))
                *slot = std::move(value);
            else
                receiver.as_mapping()->entries.emplace_back(key.as_text(),
                                                            std::move(value));
            return;
        }
        if (receiver.is_sequence()) {
            if (!key.is_integer())
                fault(ErrorKind::TypeError,
                      "list indices must be integers, not " + key.type_name(),
                      target.span);
            auto& items = *receiver.as_sequence();
            long long i = key.as_integer();
            if (i < 0) i += static_cast<long long>(items.size());
            if (i < 0 || i >= static_cast<long long>(items.size()))
                fault(ErrorKind::IndexError, "list assignment index out of range",
                      target.span);
            items[static_cast<std::size_t>(i)] = std::move(value);
            return;
        }
        fault(ErrorKind::TypeError,
              "'" + receiver.type_name() + "' object does not support item assignment",
              target.span);
    }

    void exec(const ForLoop& node, const Stmt& stmt, Env& env) {
        Value iterable = eval(*node.iterable, env);
        recorder_.add(TraceKind::Control, stmt.source_line, stmt.span,
                      {render_repr(iterable)}, "for");
        iterate(iterable, node.loop_vars, stmt.span, env, [&](Env& e) {
            tick(stmt);
            exec_block(node.body, e);
        });
    }

    void exec(const IfStmt& node, const Stmt& stmt, Env& env) {
        for (const auto& arm : node.arms) {
            Value cond = eval(*arm.condition, env);
            if (cond.truthy()) {
                recorder_.add(TraceKind::Control, stmt.source_line, stmt.span,
                              {render_repr(cond)}, "if");
                exec_block(arm.body, env);
                return;
            }
        }
        recorder_.add(TraceKind::Control, stmt.source_line, stmt.span, {}, "else");
        exec_block(node.else_body, env);
    }

    void exec(const FunctionDef& node, const Stmt& stmt, Env& env) {
        auto fn = std::make_shared<FunctionValue>();
        fn->name = node.name;
        fn->params = node.params;
        fn->body = node.body;
        env.set(node.name, Value::function(fn));
        recorder_.add(TraceKind::Control, stmt.source_line, stmt.span, {},
                      "def " + node.name);
    }

    void exec(const ReturnStmt& node, const Stmt&, Env& env) {
        throw ReturnSignal{node.value ? eval(*node.value, env) : Value::null()};
    }

    void exec(const ExpressionStmt& node, const Stmt& stmt, Env& env) {
        Value value = eval(*node.expr, env);
        recorder_.add(TraceKind::Control, stmt.source_line, stmt.span, {},
                      render_repr(value));
    }

    void exec(const Import& node, const Stmt& stmt, Env&) {
        recorder_.add(TraceKind::Control, stmt.source_line, stmt.span, {},
                      "import " + node.module);
    }

    template <typename Body>
    void iterate(const Value& iterable, const std::vector<std::string>& vars,
                 SourceSpan span, Env& env, Body body) {
        auto bind = [&](const Value& element) {
            if (vars.size() == 1) {
                env.set(vars[0], element);
            } else {
                if (!element.is_sequence() ||
                    element.as_sequence()->size() != vars.size())
                    fault(ErrorKind::ValueError,
                          "cannot unpack element into " + std::to_string(vars.size()) +
                              " names",
                          span);
                for (std::size_t i = 0; i < vars.size(); i++)
                    env.set(vars[i], (*element.as_sequence())[i]);
            }
            body(env);
        };
        if (iterable.is_sequence()) {
            const auto seq = iterable.as_sequence();
            for (std::size_t i = 0; i < seq->size(); i++) bind((*seq)[i]);
        } else if (iterable.is_text()) {
            // Iterating text yields one single-character text per step.
            for (const auto& ch : utf8_chars(iterable.as_text()))
                bind(Value::text(ch));
        } else if (iterable.is_mapping()) {
            auto entries = iterable.as_mapping()->entries; // snapshot of keys
            for (const auto& [k, v] : entries) bind(Value::text(k));
        } else if (iterable.is_docs()) {
            // retrieve() is declared to return a list of document strings.
            for (const auto& d : iterable.as_docs()->docs) bind(Value::text(d.text));
        } else {
            fault(ErrorKind::TypeError,
                  "'" + iterable.type_name() + "' object is not iterable", span);
        }
    }

    // --- expressions -------------------------------------------------------

    Value eval(const Expr& expr, Env& env) {
        return std::visit([&](const auto& node) { return eval_node(node, expr, env); },
                          expr.node);
    }

    Value eval_node(const TextLit& n, const Expr&, Env&) { return Value::text(n.value); }
    Value eval_node(const IntLit& n, const Expr&, Env&) { return Value::integer(n.value); }
    Value eval_node(const BoolLit& n, const Expr&, Env&) { return Value::boolean(n.value); }
    Value eval_node(const NoneLit&, const Expr&, Env&) { return Value::null(); }

    Value eval_node(const Identifier& n, const Expr& expr, Env& env) {
        if (Value* v = env.find(n.name)) return *v;
        fault(ErrorKind::NameError, "name '" + n.name + "' is not defined", expr.span);
    }

    Value eval_node(const ListLit& n, const Expr&, Env& env) {
        std::vector<Value> items;
        items.reserve(n.items.size());
        for (const auto& item : n.items) items.push_back(eval(*item, env));
        return Value::sequence(std::move(items));
    }

    Value eval_node(const DictLit& n, const Expr& expr, Env& env) {
        Value map = Value::mapping();
        for (const auto& [k, v] : n.items) {
            Value key = eval(*k, env);
            if (!key.is_text())
                fault(ErrorKind::TypeError,
                      "mapping keys must be str, not " + key.type_name(), expr.span);
            Value value = eval(*v, env);
            if (Value* slot = map.as_mapping()->find(key.as_text()))
                *slot = std::move(value);
            else
                map.as_mapping()->entries.emplace_back(key.as_text(), std::move(value));
        }
        return map;
    }

    Value eval_node(const FString& n, const Expr&, Env& env) {
        std::string out;
        for (const auto& part : n.parts) {
            if (part.expr) out += render_str(eval(*part.expr, env));
            else out += part.text;
        }
        return Value::text(out);
    }

    Value eval_node(const Conditional& n, const Expr&, Env& env) {
        if (eval(*n.condition, env).truthy()) return eval(*n.then_value, env);
        return eval(*n.else_value, env);
    }

    Value eval_node(const NotOp& n, const Expr&, Env& env) {
        return Value::boolean(!eval(*n.operand, env).truthy());
    }

    Value eval_node(const Comprehension& n, const Expr& expr, Env& env) {
        Value iterable = eval(*n.iterable, env);
        Env scope;
        scope.parent = &env;
        if (n.is_dict) {
            Value map = Value::mapping();
            iterate(iterable, n.loop_vars, expr.span, scope, [&](Env& e) {
                if (n.condition && !eval(*n.condition, e).truthy()) return;
                Value key = eval(*n.key, e);
                if (!key.is_text())
                    fault(ErrorKind::TypeError,
                          "mapping keys must be str, not " + key.type_name(), expr.span);
                Value value = eval(*n.value, e);
                if (Value* slot = map.as_mapping()->find(key.as_text()))
                    *slot = std::move(value);
                else
                    map.as_mapping()->entries.emplace_back(key.as_text(),
                                                           std::move(value));
            });
            return map;
        }
        std::vector<Value> items;
        iterate(iterable, n.loop_vars, expr.span, scope, [&](Env& e) {
            if (n.condition && !eval(*n.condition, e).truthy()) return;
            items.push_back(eval(*n.element, e));
        });
        return Value::sequence(std::move(items));
    }

    Value eval_node(const Index& n, const Expr& expr, Env& env) {
        Value receiver = eval(*n.receiver, env);
        Value key = eval(*n.key, env);
        if (receiver.is_mapping()) {
            if (!key.is_text())
                fault(ErrorKind::TypeError,
                      "mapping keys must be str, not " + key.type_name(), expr.span);
            if (const Value* v = receiver.as_mapping()->find(key.as_text())) return *v;
            fault(ErrorKind::KeyError, "'" + key.as_text() + "'", expr.span);
        }
        if (receiver.is_sequence() || receiver.is_text() || receiver.is_docs()) {
            if (!key.is_integer())
                fault(ErrorKind::TypeError,
                      "indices must be integers, not " + key.type_name(), expr.span);
            long long i = key.as_integer();
            if (receiver.is_sequence()) {
                const auto& items = *receiver.as_sequence();
                if (i < 0) i += static_cast<long long>(items.size());
                if (i < 0 || i >= static_cast<long long>(items.size()))
                    fault(ErrorKind::IndexError, "list index out of range", expr.span);
                return items[static_cast<std::size_t>(i)];
            }
            if (receiver.is_text()) {
                auto chars = utf8_chars(receiver.as_text());
                if (i < 0) i += static_cast<long long>(chars.size());
                if (i < 0 || i >= static_cast<long long>(chars.size()))
                    fault(ErrorKind::IndexError, "string index out of range", expr.span);
                return Value::text(chars[static_cast<std::size_t>(i)]);
            }
            const auto& docs = receiver.as_docs()->docs;
            if (i < 0) i += static_cast<long long>(docs.size());
            if (i < 0 || i >= static_cast<long long>(docs.size()))
                fault(ErrorKind::IndexError, "document index out of range", expr.span);
            return Value::text(docs[static_cast<std::size_t>(i)].text);
        }
        fault(ErrorKind::TypeError,
              "'" + receiver.type_name() + "' object is not subscriptable", expr.span);
    }

    Value eval_node(const Binary& n, const Expr& expr, Env& env) {
        if (n.op == BinOp::And) {
            Value lhs = eval(*n.lhs, env);
            return lhs.truthy() ? eval(*n.rhs, env) : lhs;
        }
        if (n.op == BinOp::Or) {
            Value lhs = eval(*n.lhs, env);
            return lhs.truthy() ? lhs : eval(*n.rhs, env);
        }
        Value lhs = eval(*n.lhs, env);
        Value rhs = eval(*n.rhs, env);
        return apply_binary(n.op, lhs, rhs, expr.span);
    }

    static bool numeric(const Value& v) { return v.is_integer() || v.is_boolean(); }
    static long long as_number(const Value& v) {
        return v.is_boolean() ? (v.as_boolean() ? 1 : 0) : v.as_integer();
    }

    Value apply_binary(BinOp op, const Value& lhs, const Value& rhs, SourceSpan span) {
        switch (op) {
            case BinOp::Eq: return Value::boolean(lhs.equals(rhs));
            case BinOp::Ne: return Value::boolean(!lhs.equals(rhs));
            case BinOp::Add:
                if (numeric(lhs) && numeric(rhs))
                    return Value::integer(as_number(lhs) + as_number(rhs));
                if (lhs.is_text() && rhs.is_text())
                    return Value::text(lhs.as_text() + rhs.as_text());
                if (lhs.is_sequence() && rhs.is_sequence()) {
                    std::vector<Value> items = *lhs.as_sequence();
                    items.insert(items.end(), rhs.as_sequence()->begin(),
                                 rhs.as_sequence()->end());
                    return Value::sequence(std::move(items));
                }
                fault(ErrorKind::TypeError,
                      "unsupported operand type(s) for +: '" + lhs.type_name() +
                          "' and '" + rhs.type_name() + "'",
                      span);
            case BinOp::Sub:
                if (numeric(lhs) && numeric(rhs))
                    return Value::integer(as_number(lhs) - as_number(rhs));
                fault(ErrorKind::TypeError,
                      "unsupported operand type(s) for -: '" + lhs.type_name() +
                          "' and '" + rhs.type_name() + "'",
                      span);
            case BinOp::Mul:
                if (numeric(lhs) && numeric(rhs))
                    return Value::integer(as_number(lhs) * as_number(rhs));
                fault(ErrorKind::UnsupportedConstruct,
                      "'*' is only supported between integers", span);
            case BinOp::Lt:
            case BinOp::Gt:
            case BinOp::Le:
            case BinOp::Ge: {
                bool result;
                if (numeric(lhs) && numeric(rhs)) {
                    long long a = as_number(lhs), b = as_number(rhs);
                    result = op == BinOp::Lt ? a < b
                           : op == BinOp::Gt ? a > b
                           : op == BinOp::Le ? a <= b
                                             : a >= b;
                } else if (lhs.is_text() && rhs.is_text()) {
                    int cmp = lhs.as_text().compare(rhs.as_text());
                    result = op == BinOp::Lt ? cmp < 0
                           : op == BinOp::Gt ? cmp > 0
                           : op == BinOp::Le ? cmp <= 0
                                             : cmp >= 0;
                } else {
                    fault(ErrorKind::TypeError,
                          "'" + to_string(op) + "' not supported between instances of '" +
                              lhs.type_name() + "' and '" + rhs.type_name() + "'",
                          span);
                }
                return Value::boolean(result);
            }
            case BinOp::In: {
                if (rhs.is_text()) {
                    if (!lhs.is_text())
                        fault(ErrorKind::TypeError,
                              "'in <str>' requires str as left operand, not " +
                                  lhs.type_name(),
                              span);
                    return Value::boolean(rhs.as_text().find(lhs.as_text()) !=
                                          std::string::npos);
                }
                if (rhs.is_sequence()) {
                    for (const auto& item : *rhs.as_sequence())
                        if (item.equals(lhs)) return Value::boolean(true);
                    return Value::boolean(false);
                }
                if (rhs.is_mapping()) {
                    if (!lhs.is_text()) return Value::boolean(false);
                    return Value::boolean(rhs.as_mapping()->find(lhs.as_text()) !=
                                          nullptr);
                }
                fault(ErrorKind::TypeError,
                      "argument of type '" + rhs.type_name() + "' is not iterable",
                      span);
            }
            default:
                fault(ErrorKind::TypeError, "unsupported operator", span);
        }
    }

    Value eval_node(const MethodCall& n, const Expr& expr, Env& env) {
        Value receiver = eval(*n.receiver, env);
        if (receiver.is_null())
            fault(ErrorKind::TypeError,
                  "'NoneType' object has no attribute '" + n.method + "'", expr.span);
        std::vector<Value> args;
        args.reserve(n.args.size());
        for (const auto& a : n.args) args.push_back(eval(*a, env));
        return call_method(receiver, n.method, args, expr.span);
    }

    Value call_method(const Value& receiver, const std::string& method,
                      const std::vector<Value>& args, SourceSpan span) {
        auto need_text = [&]() -> const std::string& {
            if (!receiver.is_text())
                fault(ErrorKind::TypeError,
                      "'" + receiver.type_name() + "' object has no attribute '" +
                          method + "'",
                      span);
            return receiver.as_text();
        };
        auto arity = [&](std::size_t lo, std::size_t hi) {
            if (args.size() < lo || args.size() > hi)
                fault(ErrorKind::TypeError,
                      method + "() takes " + std::to_string(lo) +
                          (hi != lo ? ".." + std::to_string(hi) : "") +
                          " arguments (" + std::to_string(args.size()) + " given)",
                      span);
        };

        if (method == "split") {
            const std::string& s = need_text();
            arity(0, 1);
            std::vector<Value> parts;
            if (args.empty()) {
                std::string cur;
                for (char c : s) {
                    if (std::isspace(static_cast<unsigned char>(c))) {
                        if (!cur.empty()) { parts.push_back(Value::text(cur)); cur.clear(); }
                    } else cur += c;
                }
                if (!cur.empty()) parts.push_back(Value::text(cur));
            } else {
                if (!args[0].is_text())
                    fault(ErrorKind::TypeError, "split() separator must be str", span);
                const std::string& sep = args[0].as_text();
                if (sep.empty())
                    fault(ErrorKind::ValueError, "empty separator", span);
                std::size_t start = 0;
                while (true) {
                    std::size_t at = s.find(sep, start);
                    if (at == std::string::npos) {
                        parts.push_back(Value::text(s.substr(start)));
                        break;
                    }
                    parts.push_back(Value::text(s.substr(start, at - start)));
                    start = at + sep.size();
                }
            }
            return Value::sequence(std::move(parts));
        }
        if (method == "strip") {
            const std::string& s = need_text();
            arity(0, 0);
            std::size_t b = 0, e = s.size();
            while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
            while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
            return Value::text(s.substr(b, e - b));
        }
        if (method == "lower" || method == "upper") {
            const std::string& s = need_text();
            arity(0, 0);
            std::string out = s;
            for (char& c : out)
                c = method == "lower" ? std::tolower(static_cast<unsigned char>(c))
                                      : std::toupper(static_cast<unsigned char>(c));
            return Value::text(out);
        }
        if (method == "join") {
            const std::string& sep = need_text();
            arity(1, 1);
            if (!args[0].is_sequence())
                fault(ErrorKind::TypeError, "join() argument must be a list", span);
            std::string out;
            const auto& items = *args[0].as_sequence();
            for (std::size_t i = 0; i < items.size(); i++) {
                if (!items[i].is_text())
                    fault(ErrorKind::TypeError,
                          "sequence item " + std::to_string(i) + ": expected str, " +
                              items[i].type_name() + " found",
                          span);
                if (i) out += sep;
                out += items[i].as_text();
            }
            return Value::text(out);
        }
        if (method == "keys" || method == "values" || method == "items") {
            if (!receiver.is_mapping())
                fault(ErrorKind::TypeError,
                      "'" + receiver.type_name() + "' object has no attribute '" +
                          method + "'",
                      span);
            arity(0, 0);
            std::vector<Value> out;
            for (const auto& [k, v] : receiver.as_mapping()->entries) {
                if (method == "keys") out.push_back(Value::text(k));
                else if (method == "values") out.push_back(v);
                else out.push_back(Value::sequence({Value::text(k), v}));
            }
            return Value::sequence(std::move(out));
        }
        if (method == "append") {
            if (!receiver.is_sequence())
                fault(ErrorKind::TypeError,
                      "'" + receiver.type_name() + "' object has no attribute 'append'",
                      span);
            arity(1, 1);
            receiver.as_sequence()->push_back(args[0]);
            return Value::null();
        }
        if (method == "get") {
            if (!receiver.is_mapping())
                fault(ErrorKind::TypeError,
                      "'" + receiver.type_name() + "' object has no attribute 'get'",
                      span);
            arity(1, 2);
            if (!args[0].is_text())
                fault(ErrorKind::TypeError, "get() key must be str", span);
            if (const Value* v = receiver.as_mapping()->find(args[0].as_text()))
                return *v;
            return args.size() == 2 ? args[1] : Value::null();
        }
        if (method == "group") {
            if (!receiver.is_match())
                fault(ErrorKind::TypeError,
                      "'" + receiver.type_name() + "' object has no attribute 'group'",
                      span);
            arity(0, 0);
            return Value::text(receiver.as_match().matched);
        }
        fault(ErrorKind::UnsupportedConstruct, "method '." + method + "' is unsupported",
              span);
    }

    Value eval_node(const Call& n, const Expr& expr, Env& env) {
        if (n.callee.size() == 2) {
            // only re.search survives parsing
            return call_re_search(n, expr, env);
        }
        const std::string& name = n.callee[0];
        if (name == "retrieve") return call_retrieve(n, expr, env);
        if (name == "answer") return call_answer(n, expr, env);

        if (Value* bound = env.find(name)) {
            if (!bound->is_function())
                fault(ErrorKind::TypeError,
                      "'" + bound->type_name() + "' object is not callable", expr.span);
            return call_function(*bound->as_function(), n, expr, env);
        }

        std::vector<Value> args;
        args.reserve(n.args.size());
        for (const auto& a : n.args) args.push_back(eval(*a, env));
        if (!n.kwargs.empty())
            fault(ErrorKind::TypeError,
                  name + "() got an unexpected keyword argument '" +
                      n.kwargs.front().first + "'",
                  expr.span);
        return call_builtin(name, args, expr.span);
    }

    Value call_builtin(const std::string& name, const std::vector<Value>& args,
                       SourceSpan span) {
        auto arity = [&](std::size_t lo, std::size_t hi) {
            if (args.size() < lo || args.size() > hi)
                fault(ErrorKind::TypeError,
                      name + "() takes " + std::to_string(lo) + ".." +
                          std::to_string(hi) + " arguments (" +
                          std::to_string(args.size()) + " given)",
                      span);
        };
        if (name == "int") {
            arity(1, 1);
            const Value& v = args[0];
            if (v.is_integer()) return v;
            if (v.is_boolean()) return Value::integer(v.as_boolean() ? 1 : 0);
            if (v.is_text()) {
                std::string s = v.as_text();
                std::size_t b = 0, e = s.size();
                while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
                while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
                std::string body = s.substr(b, e - b);
                std::size_t i = 0;
                if (i < body.size() && (body[i] == '+' || body[i] == '-')) i++;
                bool ok = i < body.size();
                for (std::size_t j = i; j < body.size(); j++)
                    if (!std::isdigit(static_cast<unsigned char>(body[j]))) ok = false;
                if (!ok)
                    fault(ErrorKind::ValueError,
                          "invalid literal for int() with base 10: " +
                              render_repr(Value::text(s)),
                          span);
                return Value::integer(std::stoll(body));
            }
            fault(ErrorKind::TypeError,
                  "int() argument must be a string or a number, not '" + v.type_name() +
                      "'",
                  span);
        }
        if (name == "str") {
            arity(1, 1);
            return Value::text(render_str(args[0]));
        }
        if (name == "len") {
            arity(1, 1);
            const Value& v = args[0];
            if (v.is_text())
                return Value::integer(static_cast<long long>(utf8_chars(v.as_text()).size()));
            if (v.is_sequence())
                return Value::integer(static_cast<long long>(v.as_sequence()->size()));
            if (v.is_mapping())
                return Value::integer(
                    static_cast<long long>(v.as_mapping()->entries.size()));
            if (v.is_docs())
                return Value::integer(static_cast<long long>(v.as_docs()->docs.size()));
            fault(ErrorKind::TypeError,
                  "object of type '" + v.type_name() + "' has no len()", span);
        }
        if (name == "all" || name == "any") {
            arity(1, 1);
            if (!args[0].is_sequence())
                fault(ErrorKind::TypeError, name + "() argument must be iterable", span);
            bool is_all = name == "all";
            for (const auto& item : *args[0].as_sequence()) {
                if (is_all && !item.truthy()) return Value::boolean(false);
                if (!is_all && item.truthy()) return Value::boolean(true);
            }
            return Value::boolean(is_all);
        }
        if (name == "range") {
            arity(1, 3);
            for (const auto& a : args)
                if (!a.is_integer())
                    fault(ErrorKind::TypeError, "range() arguments must be integers",
                          span);
            long long start = 0, stop = 0, step = 1;
            if (args.size() == 1) stop = args[0].as_integer();
            else {
                start = args[0].as_integer();
                stop = args[1].as_integer();
                if (args.size() == 3) step = args[2].as_integer();
            }
            if (step == 0)
                fault(ErrorKind::ValueError, "range() arg 3 must not be zero", span);
            std::vector<Value> out;
            if (step > 0)
                for (long long i = start; i < stop; i += step)
                    out.push_back(Value::integer(i));
            else
                for (long long i = start; i > stop; i += step)
                    out.push_back(Value::integer(i));
            return Value::sequence(std::move(out));
        }
        fault(ErrorKind::NameError, "name '" + name + "' is not defined", span);
    }

    Value call_re_search(const Call& n, const Expr& expr, Env& env) {
        if (!program_imported_re_)
            check_re_import();
        if (n.args.size() != 2)
            fault(ErrorKind::TypeError,
                  "re.search() takes 2 arguments (" + std::to_string(n.args.size()) +
                      " given)",
                  expr.span);
        Value pattern = eval(*n.args[0], env);
        Value text = eval(*n.args[1], env);
        if (!pattern.is_text() || !text.is_text())
            fault(ErrorKind::TypeError, "re.search() arguments must be str", expr.span);
        try {
            std::regex re(pattern.as_text(), std::regex::ECMAScript);
            std::smatch m;
            if (std::regex_search(text.as_text(), m, re))
                return Value::match(m.str(0));
            return Value::null();
        } catch (const std::regex_error& e) {
            fault(ErrorKind::ValueError,
                  std::string("invalid regular expression: ") + e.what(), expr.span);
        }
    }

    bool program_imported_re_ = false;
    void check_re_import() {
        for (const auto& stmt : program_.statements)
            if (const auto* imp = std::get_if<Import>(&stmt->node); imp && imp->module == "re")
                program_imported_re_ = true;
        if (!program_imported_re_)
            fault(ErrorKind::NameError, "name 're' is not defined (missing import re)");
    }

    Value call_function(const FunctionValue& fn, const Call& n, const Expr& expr,
                        Env& env) {
        if (n.args.size() != fn.params.size() || !n.kwargs.empty())
            fault(ErrorKind::TypeError,
                  fn.name + "() takes " + std::to_string(fn.params.size()) +
                      " positional arguments but " + std::to_string(n.args.size()) +
                      " were given",
                  expr.span);
        if (++call_depth_ > 32) {
            call_depth_--;
            fault(ErrorKind::BudgetExceeded, "maximum recursion depth exceeded (32)",
                  expr.span);
        }
        Env frame;
        frame.parent = &global_;
        for (std::size_t i = 0; i < fn.params.size(); i++)
            frame.set(fn.params[i], eval(*n.args[i], env));
        Value result = Value::null();
        try {
            exec_block(fn.body, frame);
        } catch (ReturnSignal& r) {
            result = std::move(r.value);
        } catch (...) {
            call_depth_--;
            throw;
        }
        call_depth_--;
        return result;
    }

    Value call_retrieve(const Call& n, const Expr& expr, Env& env) {
        if (n.args.size() != 1)
            fault(ErrorKind::TypeError,
                  "retrieve() takes 1 positional argument (" +
                      std::to_string(n.args.size()) + " given)",
                  expr.span);
        Value query = eval(*n.args[0], env);
        if (!query.is_text())
            fault(ErrorKind::TypeError, "retrieve() query must be str", expr.span);
        std::optional<int> topk;
        for (const auto& [key, value] : n.kwargs) {
            if (key != "topk")
                fault(ErrorKind::TypeError,
                      "retrieve() got an unexpected keyword argument '" + key + "'",
                      expr.span);
            Value k = eval(*value, env);
            if (!k.is_integer())
                fault(ErrorKind::TypeError, "topk must be int", expr.span);
            topk = static_cast<int>(k.as_integer());
        }
        charge_tool_call("retrieve", expr.span);
        try {
            DocumentSet docs = tools_.retrieve(query.as_text(), topk, recorder_);
            return Value::docs(std::move(docs));
        } catch (const ToolError& e) {
            fault(ErrorKind::ToolFailure, e.what(), expr.span);
        }
    }

    Value call_answer(const Call& n, const Expr& expr, Env& env) {
        if (n.args.empty() || n.args.size() > 2 || !n.kwargs.empty())
            fault(ErrorKind::TypeError,
                  "answer() takes 1 or 2 positional arguments (" +
                      std::to_string(n.args.size()) + " given)",
                  expr.span);
        Value query = eval(*n.args[0], env);
        if (!query.is_text())
            fault(ErrorKind::TypeError, "answer() query must be str", expr.span);
        const DocumentSet* docs = nullptr;
        DocumentSet empty;
        if (n.args.size() == 2) {
            Value d = eval(*n.args[1], env);
            if (d.is_docs()) {
                docs = d.as_docs().get();
            } else if (d.is_sequence() && d.as_sequence()->empty()) {
                docs = nullptr; // answer(q, []) degrades to aggregation mode
            } else if (d.is_null()) {
                docs = nullptr;
            } else {
                fault(ErrorKind::TypeError,
                      "answer() docs must be a retrieve() result", expr.span);
            }
        }
        charge_tool_call("answer", expr.span);
        try {
            std::string a = tools_.answer(query.as_text(), docs, recorder_);
            Value result = Value::text(a);
            last_answer_value_ = result;
            return result;
        } catch (const ToolError& e) {
            fault(ErrorKind::ToolFailure, e.what(), expr.span);
        }
    }
};

} // namespace

ExecutionOutcome execute(const dsl::PlanProgram& program, ToolHost& tools,
                         const ExecutionLimits& limits, TraceRecorder& recorder) {
    Interp interp(program, tools, limits, recorder);
    return interp.run();
}

ExecutionOutcome execute(const dsl::PlanProgram& program, ToolHost& tools,
                         const ExecutionLimits& limits, ExecutionTrace& trace) {
    TraceRecorder recorder(trace);
    return execute(program, tools, limits, recorder);
}

} // namespace ragexec::interp
