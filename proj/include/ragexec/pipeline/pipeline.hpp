#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include "ragexec/agents/agents.hpp"
#include "ragexec/interp/interpreter.hpp"
#include "ragexec/tools/tools.hpp"

namespace ragexec::pipeline {

struct PipelineConfig {
    tools::RetrievalBudget budget;
    tools::SentinelPolicy sentinel;
    int max_repair_rounds = 3; // T; 0 disables self-repair
    interp::ExecutionLimits limits;
    bool merge_decompose_plan = false;
    agents::AgentConfig agent_config;
    tools::StdToolHost::RetrieveFn retrieve; // backend selector
};

struct CallStats {
    int chat_calls = 0;
    int retrieve_calls = 0;
    int answer_calls = 0;
    int repair_rounds_used = 0;
    int adaptive_boosts_used = 0;

    bool operator==(const CallStats&) const = default;
};

struct QuestionResult {
    std::string question_id;
    std::optional<std::string> predicted_answer;
    // answered | program-error | plan-failure | decompose-fallback-answered |
    // tool-failure
    std::string status;
    interp::ExecutionTrace trace;
    CallStats call_stats;
    std::optional<interp::StructuredError> error;
    std::chrono::milliseconds elapsed{0};
};

QuestionResult run_question(const std::string& question_id,
                            const std::string& question, llm::ChatClient& client,
                            const PipelineConfig& config);

struct AccountingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Recomputes call-stats from the trace and asserts equality with the
// recorded stats.
CallStats count_llm_calls(const QuestionResult& result);

// Trace-only recomputation used by count_llm_calls and the CLI trace view.
CallStats stats_from_trace(const interp::ExecutionTrace& trace);

} // namespace ragexec::pipeline
