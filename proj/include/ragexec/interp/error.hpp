#pragma once

#include <string>

#include "ragexec/span.hpp"

namespace ragexec::interp {

// Fault kinds mirror the runtime-exception taxonomy plus artifact-level
// budget/tool faults.
enum class ErrorKind {
    SyntaxError,
    NameError,
    TypeError,
    ValueError,
    IndexError,
    KeyError,
    ZeroDivision,
    UnsupportedConstruct,
    ToolFailure,
    BudgetExceeded,
    Timeout,
};

std::string to_string(ErrorKind kind);

struct StructuredError {
    ErrorKind kind = ErrorKind::TypeError;
    std::string message;
    SourceSpan span;
    std::string source_line; // statement text at the fault site

    // Fills the {error_msg} slot of the runtime-repair template.
    std::string traceback() const;
};

} // namespace ragexec::interp
