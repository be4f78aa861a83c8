#pragma once

#include <variant>

#include "ragexec/dsl/ast.hpp"
#include "ragexec/dsl/token.hpp"

namespace ragexec::dsl {

using ParseResult = std::variant<PlanProgram, SyntaxDiagnostic>;

// Total: returns a program or a diagnostic for any input text, never throws.
// Code fences are stripped before tokenizing. Constructs outside the accepted
// subset (while, classes, slicing, imports other than re, ...) yield a
// diagnostic with unsupported=true.
ParseResult parse_program(const std::string& source);

// Canonical re-rendering of the AST; parse(render(parse(s))) is structurally
// equal to parse(s).
std::string render_program(const PlanProgram& program);
std::string render_expr(const Expr& expr);

// Structural equality ignoring spans and source text.
bool ast_equal(const PlanProgram& a, const PlanProgram& b);

} // namespace ragexec::dsl
