#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>

#include "ragexec/dsl/ast.hpp"
#include "ragexec/interp/error.hpp"
#include "ragexec/interp/trace.hpp"
#include "ragexec/interp/value.hpp"

namespace ragexec::interp {

struct ExecutionLimits {
    int max_tool_calls = 50;
    int max_statements = 10000;
    std::chrono::milliseconds wall_clock_budget{300000};
};

// Raised by tool hosts on backend failure; the interpreter converts it into a
// StructuredError with kind ToolFailure.
struct ToolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Host for the two tool primitives. Shareable across concurrent executions;
// per-question accounting lives in the trace, not here.
class ToolHost {
public:
    virtual ~ToolHost() = default;
    virtual DocumentSet retrieve(const std::string& query, std::optional<int> topk,
                                 TraceRecorder& recorder) = 0;
    virtual std::string answer(const std::string& query, const DocumentSet* docs,
                               TraceRecorder& recorder) = 0;
};

struct ExecutionOutcome {
    std::optional<std::string> final_answer; // rendered text
    Value final_value;
    std::optional<StructuredError> error;
};

// Executes the program over a fresh environment, appending to the given trace.
// Never throws; every fault becomes a StructuredError in the outcome.
ExecutionOutcome execute(const dsl::PlanProgram& program, ToolHost& tools,
                         const ExecutionLimits& limits, TraceRecorder& recorder);

// Convenience overload that owns its trace.
ExecutionOutcome execute(const dsl::PlanProgram& program, ToolHost& tools,
                         const ExecutionLimits& limits, ExecutionTrace& trace);

} // namespace ragexec::interp
