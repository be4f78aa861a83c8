#include "ragexec/dsl/parser.hpp"

#include <sstream>
#include <unordered_set>

namespace ragexec::dsl {

namespace {

const std::unordered_set<std::string> kMethodWhitelist = {
    "split", "strip", "lower", "upper", "join", "values", "keys", "items",
    "append", "get", "group",
};

struct ParseError {
    SyntaxDiagnostic diagnostic;
};

[[noreturn]] void raise(const std::string& msg, SourceSpan span,
                        const std::string& frag = "", bool unsupported = false) {
    throw ParseError{SyntaxDiagnostic{msg, span, frag, unsupported}};
}

struct Parser {
    const std::vector<Token>& tokens;
    std::size_t pos = 0;
    const std::vector<std::string>& lines;

    const Token& peek(std::size_t off = 0) const {
        std::size_t i = pos + off;
        if (i >= tokens.size()) i = tokens.size() - 1;
        return tokens[i];
    }
    const Token& advance() { return tokens[pos < tokens.size() - 1 ? pos++ : pos]; }
    bool check(TokenKind k) const { return peek().kind == k; }
    bool check_kw(const char* kw) const {
        return peek().kind == TokenKind::Keyword && peek().text == kw;
    }
    bool check_op(const char* op) const {
        return peek().kind == TokenKind::Op && peek().text == op;
    }
    const Token& expect(TokenKind k, const std::string& what) {
        if (!check(k)) raise("expected " + what, peek().span, peek().text);
        return advance();
    }
    void expect_kw(const char* kw) {
        if (!check_kw(kw)) raise(std::string("expected '") + kw + "'", peek().span, peek().text);
        advance();
    }

    std::string line_text(int line) const {
        if (line >= 1 && line <= static_cast<int>(lines.size())) {
            const std::string& s = lines[line - 1];
            std::size_t b = s.find_first_not_of(' ');
            return b == std::string::npos ? s : s.substr(b);
        }
        return "";
    }

    ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    // --- expressions -------------------------------------------------------

    ExprPtr parse_expression() { return parse_conditional(); }

    ExprPtr parse_conditional() {
        ExprPtr value = parse_or();
        if (check_kw("if")) {
            SourceSpan span = peek().span;
            advance();
            ExprPtr cond = parse_or();
            expect_kw("else");
            ExprPtr other = parse_conditional();
            return make({Conditional{value, cond, other}, span});
        }
        return value;
    }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (check_kw("or")) {
            SourceSpan span = peek().span;
            advance();
            lhs = make({Binary{BinOp::Or, lhs, parse_and()}, span});
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_not();
        while (check_kw("and")) {
            SourceSpan span = peek().span;
            advance();
            lhs = make({Binary{BinOp::And, lhs, parse_not()}, span});
        }
        return lhs;
    }

    ExprPtr parse_not() {
        if (check_kw("not")) {
            SourceSpan span = peek().span;
            advance();
            return make({NotOp{parse_not()}, span});
        }
        return parse_comparison();
    }

    ExprPtr parse_comparison() {
        ExprPtr lhs = parse_arith();
        while (true) {
            BinOp op;
            if (check_op("==")) op = BinOp::Eq;
            else if (check_op("!=")) op = BinOp::Ne;
            else if (check_op("<")) op = BinOp::Lt;
            else if (check_op(">")) op = BinOp::Gt;
            else if (check_op("<=")) op = BinOp::Le;
            else if (check_op(">=")) op = BinOp::Ge;
            else if (check_kw("in")) op = BinOp::In;
            else if (check_kw("is"))
                raise("'is' comparisons are unsupported", peek().span, "is", true);
            else break;
            SourceSpan span = peek().span;
            advance();
            lhs = make({Binary{op, lhs, parse_arith()}, span});
        }
        return lhs;
    }

    ExprPtr parse_arith() {
        ExprPtr lhs = parse_term();
        while (check_op("+") || check_op("-")) {
            BinOp op = peek().text == "+" ? BinOp::Add : BinOp::Sub;
            SourceSpan span = peek().span;
            advance();
            lhs = make({Binary{op, lhs, parse_term()}, span});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        while (check_op("*") || check_op("/") || check_op("%")) {
            if (peek().text != "*")
                raise("operator '" + peek().text + "' is unsupported", peek().span,
                      peek().text, true);
            SourceSpan span = peek().span;
            advance();
            lhs = make({Binary{BinOp::Mul, lhs, parse_unary()}, span});
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (check_op("-")) {
            SourceSpan span = peek().span;
            advance();
            if (check(TokenKind::Integer)) {
                const Token& t = advance();
                return parse_postfix(make({IntLit{-t.int_value}, span}));
            }
            raise("unary minus is only supported on integer literals", span, "-", true);
        }
        return parse_postfix(parse_atom());
    }

    ExprPtr parse_postfix(ExprPtr expr) {
        while (true) {
            if (check(TokenKind::Dot)) {
                advance();
                const Token& name = expect(TokenKind::Identifier, "attribute name");
                if (check(TokenKind::LParen)) {
                    // re.search(...) is a dotted call; everything else is a method call
                    if (auto* id = std::get_if<Identifier>(&expr->node); id && id->name == "re") {
                        auto [args, kwargs] = parse_call_args();
                        if (!kwargs.empty())
                            raise("keyword arguments are not supported for re.search",
                                  name.span, name.text, true);
                        expr = make({Call{{id->name, name.text}, std::move(args), {}},
                                     name.span});
                        continue;
                    }
                    if (!kMethodWhitelist.count(name.text))
                        raise("method '." + name.text + "' is unsupported", name.span,
                              name.text, true);
                    auto [args, kwargs] = parse_call_args();
                    if (!kwargs.empty())
                        raise("keyword arguments in method calls are unsupported",
                              name.span, name.text, true);
                    expr = make({MethodCall{expr, name.text, std::move(args)}, name.span});
                    continue;
                }
                raise("attribute access without a call is unsupported", name.span,
                      name.text, true);
            }
            if (check(TokenKind::LParen)) {
                auto* id = std::get_if<Identifier>(&expr->node);
                if (!id)
                    raise("only named functions can be called", peek().span, "(", true);
                SourceSpan span = expr->span;
                auto [args, kwargs] = parse_call_args();
                expr = make({Call{{id->name}, std::move(args), std::move(kwargs)}, span});
                continue;
            }
            if (check(TokenKind::LBracket)) {
                SourceSpan span = peek().span;
                advance();
                if (check(TokenKind::Colon))
                    raise("slicing is unsupported", span, ":", true);
                ExprPtr key = parse_expression();
                if (check(TokenKind::Colon))
                    raise("slicing is unsupported", peek().span, ":", true);
                expect(TokenKind::RBracket, "']'");
                expr = make({Index{expr, key}, span});
                continue;
            }
            break;
        }
        return expr;
    }

    // Parses "( ... )" after a callee. Normalizes a generator argument
    // `f(x for v in it)` into a list-comprehension argument.
    std::pair<std::vector<ExprPtr>, std::vector<std::pair<std::string, ExprPtr>>>
    parse_call_args() {
        expect(TokenKind::LParen, "'('");
        std::vector<ExprPtr> args;
        std::vector<std::pair<std::string, ExprPtr>> kwargs;
        while (!check(TokenKind::RParen)) {
            if (check_op("*"))
                raise("starred arguments are unsupported", peek().span, "*", true);
            if (check(TokenKind::Identifier) && peek(1).kind == TokenKind::Assign) {
                std::string name = advance().text;
                advance(); // =
                kwargs.emplace_back(name, parse_expression());
            } else {
                ExprPtr arg = parse_expression();
                if (check_kw("for")) {
                    if (!args.empty() || !kwargs.empty())
                        raise("generator argument must be the only argument",
                              peek().span, "for");
                    arg = parse_comprehension_tail(arg, nullptr, nullptr);
                }
                args.push_back(arg);
            }
            if (check(TokenKind::Comma)) advance();
            else break;
        }
        expect(TokenKind::RParen, "')'");
        return {std::move(args), std::move(kwargs)};
    }

    ExprPtr parse_comprehension_tail(ExprPtr element, ExprPtr key, ExprPtr value) {
        SourceSpan span = peek().span;
        expect_kw("for");
        std::vector<std::string> vars = parse_loop_vars();
        expect_kw("in");
        ExprPtr iterable = parse_or();
        ExprPtr cond;
        if (check_kw("if")) {
            advance();
            cond = parse_or();
        }
        Comprehension comp;
        comp.element = element;
        comp.key = key;
        comp.value = value;
        comp.loop_vars = std::move(vars);
        comp.iterable = iterable;
        comp.condition = cond;
        comp.is_dict = key != nullptr;
        return make({std::move(comp), span});
    }

    std::vector<std::string> parse_loop_vars() {
        std::vector<std::string> vars;
        vars.push_back(expect(TokenKind::Identifier, "loop variable").text);
        while (check(TokenKind::Comma)) {
            advance();
            vars.push_back(expect(TokenKind::Identifier, "loop variable").text);
        }
        return vars;
    }

    // Adjacent string/f-string literals concatenate into one literal.
    ExprPtr parse_string_like() {
        SourceSpan span = peek().span;
        FString combined;
        bool any_fstring = false;
        while (check(TokenKind::String) || check(TokenKind::FStringStart)) {
            if (check(TokenKind::String)) {
                combined.parts.push_back({advance().text, nullptr});
            } else {
                any_fstring = true;
                advance(); // FStringStart
                while (!check(TokenKind::FStringEnd)) {
                    if (check(TokenKind::FStringText)) {
                        combined.parts.push_back({advance().text, nullptr});
                    } else if (check(TokenKind::FStringExprOpen)) {
                        advance();
                        ExprPtr e = parse_expression();
                        expect(TokenKind::FStringExprClose, "'}'");
                        combined.parts.push_back({"", e});
                    } else {
                        raise("malformed f-string", peek().span, peek().text);
                    }
                }
                advance(); // FStringEnd
            }
        }
        if (!any_fstring) {
            std::string text;
            for (auto& p : combined.parts) text += p.text;
            return make({TextLit{std::move(text)}, span});
        }
        // Merge adjacent literal parts.
        FString merged;
        for (auto& p : combined.parts) {
            if (!p.expr && !merged.parts.empty() && !merged.parts.back().expr)
                merged.parts.back().text += p.text;
            else
                merged.parts.push_back(std::move(p));
        }
        return make({std::move(merged), span});
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Integer: {
                advance();
                return make({IntLit{t.int_value}, t.span});
            }
            case TokenKind::Float:
                raise("float literals are unsupported", t.span, t.text, true);
            case TokenKind::String:
            case TokenKind::FStringStart:
                return parse_string_like();
            case TokenKind::Identifier: {
                advance();
                return make({Identifier{t.text}, t.span});
            }
            case TokenKind::Keyword: {
                if (t.text == "True") { advance(); return make({BoolLit{true}, t.span}); }
                if (t.text == "False") { advance(); return make({BoolLit{false}, t.span}); }
                if (t.text == "None") { advance(); return make({NoneLit{}, t.span}); }
                if (t.text == "lambda")
                    raise("lambda expressions are unsupported", t.span, t.text, true);
                raise("unexpected keyword '" + t.text + "'", t.span, t.text);
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr e = parse_expression();
                if (check(TokenKind::Comma))
                    raise("tuple literals are unsupported", peek().span, ",", true);
                expect(TokenKind::RParen, "')'");
                return e;
            }
            case TokenKind::LBracket: {
                SourceSpan span = t.span;
                advance();
                ListLit list;
                if (!check(TokenKind::RBracket)) {
                    ExprPtr first = parse_expression();
                    if (check_kw("for")) {
                        ExprPtr comp = parse_comprehension_tail(first, nullptr, nullptr);
                        expect(TokenKind::RBracket, "']'");
                        return comp;
                    }
                    list.items.push_back(first);
                    while (check(TokenKind::Comma)) {
                        advance();
                        if (check(TokenKind::RBracket)) break;
                        list.items.push_back(parse_expression());
                    }
                }
                expect(TokenKind::RBracket, "']'");
                return make({std::move(list), span});
            }
            case TokenKind::LBrace: {
                SourceSpan span = t.span;
                advance();
                DictLit dict;
                if (!check(TokenKind::RBrace)) {
                    ExprPtr key = parse_expression();
                    expect(TokenKind::Colon, "':'");
                    ExprPtr value = parse_expression();
                    if (check_kw("for")) {
                        ExprPtr comp = parse_comprehension_tail(nullptr, key, value);
                        expect(TokenKind::RBrace, "'}'");
                        return comp;
                    }
                    dict.items.emplace_back(key, value);
                    while (check(TokenKind::Comma)) {
                        advance();
                        if (check(TokenKind::RBrace)) break;
                        ExprPtr k = parse_expression();
                        expect(TokenKind::Colon, "':'");
                        dict.items.emplace_back(k, parse_expression());
                    }
                }
                expect(TokenKind::RBrace, "'}'");
                return make({std::move(dict), span});
            }
            default:
                raise("unexpected token", t.span, t.text);
        }
    }

    // --- statements --------------------------------------------------------

    std::vector<StmtPtr> parse_block() {
        expect(TokenKind::Colon, "':'");
        if (!check(TokenKind::Newline))
            raise("inline statement suites are unsupported", peek().span, peek().text,
                  true);
        advance();
        expect(TokenKind::Indent, "an indented block");
        std::vector<StmtPtr> body;
        while (!check(TokenKind::Dedent) && !check(TokenKind::EndOfFile))
            body.push_back(parse_statement());
        expect(TokenKind::Dedent, "end of block");
        return body;
    }

    StmtPtr finish(Stmt stmt, SourceSpan span) {
        stmt.span = span;
        stmt.source_line = line_text(span.line);
        return std::make_shared<Stmt>(std::move(stmt));
    }

    StmtPtr parse_statement() {
        const Token& t = peek();
        if (t.kind == TokenKind::Keyword) {
            const std::string& kw = t.text;
            if (kw == "for") return parse_for();
            if (kw == "if") return parse_if();
            if (kw == "def") return parse_def();
            if (kw == "return") return parse_return();
            if (kw == "import") return parse_import();
            if (kw == "while" || kw == "class" || kw == "try" || kw == "with" ||
                kw == "from" || kw == "lambda" || kw == "raise" || kw == "global" ||
                kw == "del" || kw == "yield" || kw == "assert" || kw == "pass" ||
                kw == "break" || kw == "continue")
                raise("'" + kw + "' is unsupported", t.span, kw, true);
        }
        // assignment or expression statement
        SourceSpan span = t.span;
        ExprPtr expr = parse_expression();
        if (check(TokenKind::Assign)) {
            if (!std::holds_alternative<Identifier>(expr->node) &&
                !std::holds_alternative<Index>(expr->node))
                raise("invalid assignment target", expr->span, "");
            advance();
            ExprPtr value = parse_expression();
            if (check(TokenKind::Assign))
                raise("chained assignment is unsupported", peek().span, "=", true);
            expect(TokenKind::Newline, "end of statement");
            return finish({Assignment{expr, value}, {}, {}}, span);
        }
        expect(TokenKind::Newline, "end of statement");
        return finish({ExpressionStmt{expr}, {}, {}}, span);
    }

    StmtPtr parse_for() {
        SourceSpan span = peek().span;
        advance();
        std::vector<std::string> vars = parse_loop_vars();
        expect_kw("in");
        ExprPtr iterable = parse_expression();
        std::vector<StmtPtr> body = parse_block();
        return finish({ForLoop{std::move(vars), iterable, std::move(body)}, {}, {}}, span);
    }

    StmtPtr parse_if() {
        SourceSpan span = peek().span;
        advance();
        IfStmt node;
        node.arms.push_back({parse_expression(), parse_block()});
        while (check_kw("elif")) {
            advance();
            node.arms.push_back({parse_expression(), parse_block()});
        }
        if (check_kw("else")) {
            advance();
            node.else_body = parse_block();
        }
        return finish({std::move(node), {}, {}}, span);
    }

    StmtPtr parse_def() {
        SourceSpan span = peek().span;
        if (in_function_)
            raise("nested function definitions are unsupported", span, "def", true);
        in_function_ = true;
        advance();
        std::string name = expect(TokenKind::Identifier, "function name").text;
        expect(TokenKind::LParen, "'('");
        std::vector<std::string> params;
        while (!check(TokenKind::RParen)) {
            if (check_op("*"))
                raise("starred parameters are unsupported", peek().span, "*", true);
            params.push_back(expect(TokenKind::Identifier, "parameter name").text);
            if (check(TokenKind::Assign))
                raise("default parameter values are unsupported", peek().span, "=", true);
            if (check(TokenKind::Comma)) advance();
            else break;
        }
        expect(TokenKind::RParen, "')'");
        std::vector<StmtPtr> body = parse_block();
        in_function_ = false;
        return finish({FunctionDef{std::move(name), std::move(params), std::move(body)},
                       {}, {}},
                      span);
    }

    bool in_function_ = false;

    StmtPtr parse_return() {
        SourceSpan span = peek().span;
        advance();
        ExprPtr value;
        if (!check(TokenKind::Newline)) value = parse_expression();
        expect(TokenKind::Newline, "end of statement");
        return finish({ReturnStmt{value}, {}, {}}, span);
    }

    StmtPtr parse_import() {
        SourceSpan span = peek().span;
        advance();
        std::string module = expect(TokenKind::Identifier, "module name").text;
        if (module != "re")
            raise("import of '" + module + "' is unsupported (only re)", span, module,
                  true);
        expect(TokenKind::Newline, "end of statement");
        return finish({Import{module}, {}, {}}, span);
    }

    PlanProgram parse_top(const std::string& source) {
        PlanProgram program;
        program.source = source;
        while (!check(TokenKind::EndOfFile)) {
            if (check(TokenKind::Newline)) { advance(); continue; }
            if (check(TokenKind::Indent))
                raise("unexpected indentation", peek().span, "");
            program.statements.push_back(parse_statement());
        }
        return program;
    }
};

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : s) {
        if (c == '\n') { lines.push_back(cur); cur.clear(); }
        else if (c != '\r') cur += c;
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

// --- rendering -------------------------------------------------------------

std::string quote_string(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\'': out += "\\'"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    out += '\'';
    return out;
}

struct Renderer {
    std::ostringstream out;

    void expr(const Expr& e) {
        std::visit([&](const auto& n) { node(n); }, e.node);
    }

    void node(const TextLit& n) { out << quote_string(n.value); }
    void node(const IntLit& n) { out << n.value; }
    void node(const BoolLit& n) { out << (n.value ? "True" : "False"); }
    void node(const NoneLit&) { out << "None"; }
    void node(const Identifier& n) { out << n.name; }

    void node(const ListLit& n) {
        out << '[';
        for (std::size_t i = 0; i < n.items.size(); i++) {
            if (i) out << ", ";
            expr(*n.items[i]);
        }
        out << ']';
    }

    void node(const DictLit& n) {
        out << '{';
        for (std::size_t i = 0; i < n.items.size(); i++) {
            if (i) out << ", ";
            expr(*n.items[i].first);
            out << ": ";
            expr(*n.items[i].second);
        }
        out << '}';
    }

    void node(const FString& n) {
        out << "f\"";
        for (const auto& p : n.parts) {
            if (p.expr) {
                out << '{';
                expr(*p.expr);
                out << '}';
            } else {
                for (char c : p.text) {
                    switch (c) {
                        case '{': out << "{{"; break;
                        case '}': out << "}}"; break;
                        case '"': out << "\\\""; break;
                        case '\\': out << "\\\\"; break;
                        case '\n': out << "\\n"; break;
                        case '\t': out << "\\t"; break;
                        default: out << c;
                    }
                }
            }
        }
        out << '"';
    }

    void node(const Call& n) {
        for (std::size_t i = 0; i < n.callee.size(); i++) {
            if (i) out << '.';
            out << n.callee[i];
        }
        out << '(';
        bool first = true;
        for (const auto& a : n.args) {
            if (!first) out << ", ";
            first = false;
            expr(*a);
        }
        for (const auto& [k, v] : n.kwargs) {
            if (!first) out << ", ";
            first = false;
            out << k << '=';
            expr(*v);
        }
        out << ')';
    }

    void node(const MethodCall& n) {
        expr(*n.receiver);
        out << '.' << n.method << '(';
        for (std::size_t i = 0; i < n.args.size(); i++) {
            if (i) out << ", ";
            expr(*n.args[i]);
        }
        out << ')';
    }

    void node(const Index& n) {
        expr(*n.receiver);
        out << '[';
        expr(*n.key);
        out << ']';
    }

    void node(const Binary& n) {
        out << '(';
        expr(*n.lhs);
        out << ' ' << to_string(n.op) << ' ';
        expr(*n.rhs);
        out << ')';
    }

    void node(const NotOp& n) {
        out << "(not ";
        expr(*n.operand);
        out << ')';
    }

    void node(const Comprehension& n) {
        out << (n.is_dict ? '{' : '[');
        if (n.is_dict) {
            expr(*n.key);
            out << ": ";
            expr(*n.value);
        } else {
            expr(*n.element);
        }
        out << " for ";
        for (std::size_t i = 0; i < n.loop_vars.size(); i++) {
            if (i) out << ", ";
            out << n.loop_vars[i];
        }
        out << " in ";
        expr(*n.iterable);
        if (n.condition) {
            out << " if ";
            expr(*n.condition);
        }
        out << (n.is_dict ? '}' : ']');
    }

    void node(const Conditional& n) {
        out << '(';
        expr(*n.then_value);
        out << " if ";
        expr(*n.condition);
        out << " else ";
        expr(*n.else_value);
        out << ')';
    }

    void indent(int depth) {
        for (int i = 0; i < depth * 4; i++) out << ' ';
    }

    void stmt(const Stmt& s, int depth) {
        indent(depth);
        std::visit([&](const auto& n) { stmt_node(n, depth); }, s.node);
    }

    void block(const std::vector<StmtPtr>& body, int depth) {
        for (const auto& s : body) stmt(*s, depth);
    }

    void stmt_node(const Assignment& n, int) {
        expr(*n.target);
        out << " = ";
        expr(*n.value);
        out << '\n';
    }

    void stmt_node(const ForLoop& n, int depth) {
        out << "for ";
        for (std::size_t i = 0; i < n.loop_vars.size(); i++) {
            if (i) out << ", ";
            out << n.loop_vars[i];
        }
        out << " in ";
        expr(*n.iterable);
        out << ":\n";
        block(n.body, depth + 1);
    }

    void stmt_node(const IfStmt& n, int depth) {
        for (std::size_t i = 0; i < n.arms.size(); i++) {
            if (i) indent(depth);
            out << (i == 0 ? "if " : "elif ");
            expr(*n.arms[i].condition);
            out << ":\n";
            block(n.arms[i].body, depth + 1);
        }
        if (!n.else_body.empty()) {
            indent(depth);
            out << "else:\n";
            block(n.else_body, depth + 1);
        }
    }

    void stmt_node(const FunctionDef& n, int depth) {
        out << "def " << n.name << '(';
        for (std::size_t i = 0; i < n.params.size(); i++) {
            if (i) out << ", ";
            out << n.params[i];
        }
        out << "):\n";
        block(n.body, depth + 1);
    }

    void stmt_node(const ReturnStmt& n, int) {
        out << "return";
        if (n.value) {
            out << ' ';
            expr(*n.value);
        }
        out << '\n';
    }

    void stmt_node(const ExpressionStmt& n, int) {
        expr(*n.expr);
        out << '\n';
    }

    void stmt_node(const Import& n, int) { out << "import " << n.module << '\n'; }
};

} // namespace

std::string to_string(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
        case BinOp::Lt: return "<";
        case BinOp::Gt: return ">";
        case BinOp::Le: return "<=";
        case BinOp::Ge: return ">=";
        case BinOp::And: return "and";
        case BinOp::Or: return "or";
        case BinOp::In: return "in";
    }
    return "?";
}

ParseResult parse_program(const std::string& source) {
    std::string body = strip_code_fence(source);
    auto lexed = tokenize(body);
    if (auto* diag = std::get_if<SyntaxDiagnostic>(&lexed)) return *diag;
    auto lines = split_lines(body);
    Parser parser{std::get<std::vector<Token>>(lexed), 0, lines};
    try {
        return parser.parse_top(body);
    } catch (const ParseError& e) {
        return e.diagnostic;
    }
}

std::string render_expr(const Expr& expr) {
    Renderer r;
    r.expr(expr);
    return r.out.str();
}

std::string render_program(const PlanProgram& program) {
    Renderer r;
    r.block(program.statements, 0);
    return r.out.str();
}

bool ast_equal(const PlanProgram& a, const PlanProgram& b) {
    return render_program(a) == render_program(b);
}

} // namespace ragexec::dsl
