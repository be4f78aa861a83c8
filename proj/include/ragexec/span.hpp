#pragma once

#include <cstdint>

namespace ragexec {

// 1-based source location attached to every AST node and diagnostic.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 0;

    bool operator==(const SourceSpan&) const = default;
};

} // namespace ragexec
