#include "ragexec/interp/error.hpp"

#include <sstream>

namespace ragexec::interp {

std::string to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NameError: return "NameError";
        case ErrorKind::TypeError: return "TypeError";
        case ErrorKind::ValueError: return "ValueError";
        case ErrorKind::IndexError: return "IndexError";
        case ErrorKind::KeyError: return "KeyError";
        case ErrorKind::ZeroDivision: return "ZeroDivisionError";
        case ErrorKind::UnsupportedConstruct: return "UnsupportedConstruct";
        case ErrorKind::ToolFailure: return "ToolFailure";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::Timeout: return "Timeout";
    }
    return "UnknownError";
}

std::string StructuredError::traceback() const {
    std::ostringstream out;
    out << "Traceback (most recent call last):\n";
    out << "  Line " << span.line;
    if (!source_line.empty()) out << ": " << source_line;
    out << "\n";
    out << to_string(kind) << ": " << message;
    return out.str();
}

} // namespace ragexec::interp
