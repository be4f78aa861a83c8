#include "ragexec/interp/trace.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ragexec::interp {

std::string to_string(TraceKind kind) {
    switch (kind) {
        case TraceKind::Assign: return "assign";
        case TraceKind::ToolRetrieve: return "tool-retrieve";
        case TraceKind::ToolAnswer: return "tool-answer";
        case TraceKind::Control: return "control";
        case TraceKind::Error: return "error";
        case TraceKind::AdaptiveReretrieve: return "adaptive-reretrieve";
        case TraceKind::RepairRoundStart: return "repair-round-start";
    }
    return "control";
}

namespace {

TraceKind kind_from_string(const std::string& s) {
    if (s == "assign") return TraceKind::Assign;
    if (s == "tool-retrieve") return TraceKind::ToolRetrieve;
    if (s == "tool-answer") return TraceKind::ToolAnswer;
    if (s == "error") return TraceKind::Error;
    if (s == "adaptive-reretrieve") return TraceKind::AdaptiveReretrieve;
    if (s == "repair-round-start") return TraceKind::RepairRoundStart;
    return TraceKind::Control;
}

} // namespace

std::string ExecutionTrace::to_jsonl() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        nlohmann::ordered_json j;
        j["step"] = e.step;
        j["source"] = e.source;
        j["line"] = e.span.line;
        j["kind"] = to_string(e.kind);
        j["inputs"] = e.inputs;
        j["output"] = e.output;
        if (e.k) j["k"] = *e.k;
        else j["k"] = nullptr;
        j["ms"] = e.ms;
        j["repair_round"] = e.repair_round;
        out << j.dump() << "\n";
    }
    return out.str();
}

ExecutionTrace ExecutionTrace::from_jsonl(const std::string& text) {
    ExecutionTrace trace;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("malformed trace line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
        TraceEntry entry;
        entry.step = j.value("step", 0);
        entry.source = j.value("source", "");
        entry.span.line = j.value("line", 1);
        entry.kind = kind_from_string(j.value("kind", "control"));
        if (j.contains("inputs"))
            entry.inputs = j["inputs"].get<std::vector<std::string>>();
        entry.output = j.value("output", "");
        if (j.contains("k") && !j["k"].is_null()) entry.k = j["k"].get<int>();
        entry.ms = j.value("ms", 0.0);
        entry.repair_round = j.value("repair_round", 0);
        trace.entries.push_back(std::move(entry));
    }
    return trace;
}

int TraceRecorder::add(TraceKind kind, std::string source, SourceSpan span,
                       std::vector<std::string> inputs, std::string output,
                       std::optional<int> k) {
    TraceEntry entry;
    entry.step = static_cast<int>(trace_.entries.size());
    entry.source = std::move(source);
    entry.span = span;
    entry.kind = kind;
    entry.inputs = std::move(inputs);
    entry.output = std::move(output);
    entry.k = k;
    entry.repair_round = repair_round_;
    trace_.entries.push_back(std::move(entry));
    return entry.step;
}

} // namespace ragexec::interp
