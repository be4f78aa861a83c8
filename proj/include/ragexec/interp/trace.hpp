#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ragexec/span.hpp"

namespace ragexec::interp {

enum class TraceKind {
    Assign,
    ToolRetrieve,
    ToolAnswer,
    Control,
    Error,
    AdaptiveReretrieve,
    RepairRoundStart,
};

std::string to_string(TraceKind kind);

struct TraceEntry {
    int step = 0;
    std::string source;
    SourceSpan span;
    TraceKind kind = TraceKind::Control;
    std::vector<std::string> inputs;
    std::string output;
    std::optional<int> k;
    double ms = 0.0;
    int repair_round = 0;
};

struct ExecutionTrace {
    std::vector<TraceEntry> entries;

    // One JSON object per line, fields: step, source, line, kind, inputs,
    // output, k, ms, repair_round.
    std::string to_jsonl() const;
    static ExecutionTrace from_jsonl(const std::string& text);
};

// Append-only view over a trace; carries the current repair round so every
// entry added during round r is tagged with it.
class TraceRecorder {
public:
    explicit TraceRecorder(ExecutionTrace& trace) : trace_(trace) {}

    int add(TraceKind kind, std::string source, SourceSpan span,
            std::vector<std::string> inputs, std::string output,
            std::optional<int> k = std::nullopt);

    void set_repair_round(int round) { repair_round_ = round; }
    int repair_round() const { return repair_round_; }

    ExecutionTrace& trace() { return trace_; }

private:
    ExecutionTrace& trace_;
    int repair_round_ = 0;
};

} // namespace ragexec::interp
