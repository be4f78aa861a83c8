#pragma once

#include <string>
#include <vector>

#include "ragexec/dsl/ast.hpp"

namespace ragexec::dsl {

struct LintWarning {
    std::string code;    // use-before-assign | no-terminal-answer | fstring-final | no-retrieve | single-retrieve
    std::string message;
    SourceSpan span;
};

// Static advisories only; warnings never block execution.
std::vector<LintWarning> lint_program(const PlanProgram& program);

} // namespace ragexec::dsl
