#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ragexec/dsl/parser.hpp"
#include "ragexec/interp/error.hpp"
#include "ragexec/interp/trace.hpp"
#include "ragexec/llm/chat.hpp"
#include "ragexec/retrieval/doc.hpp"

namespace ragexec::agents {

struct SubQueryList {
    std::vector<std::string> sub_queries;
    enum class Source { Parsed, FallbackOriginal } source = Source::Parsed;
};

struct PlanAttempt {
    std::string source_code;
    enum class Kind { Initial, SyntaxRetry, RuntimeRepair } kind = Kind::Initial;
    int round = 0;
    dsl::PlanProgram program;
};

// three consecutive unparseable planner outputs
struct PlanFailureError : std::runtime_error {
    explicit PlanFailureError(dsl::SyntaxDiagnostic d)
        : std::runtime_error("plan failed to parse after retries: " + d.message),
          diagnostic(std::move(d)) {}
    dsl::SyntaxDiagnostic diagnostic;
};

struct AgentConfig {
    llm::GenerationParams decompose_params;
    llm::GenerationParams plan_params;
    llm::GenerationParams answer_params;
};

// Stateless policies over a shared chat client. Every chat call is logged as
// a control trace entry with source "chat" and the template id as input, so
// call accounting can be recomputed from the trace alone.
class AgentSet {
public:
    AgentSet(llm::ChatClient& client, AgentConfig config = {})
        : client_(client), config_(std::move(config)) {}

    // <= 3 chat calls, then falls back to the original question
    SubQueryList decompose(const std::string& question,
                           interp::TraceRecorder& recorder);

    // 1 + up to 3 syntax retries; throws PlanFailureError after the third
    PlanAttempt plan(const std::string& question, const SubQueryList& subs,
                     interp::TraceRecorder& recorder);

    // runtime repair round; same syntax-retry discipline
    PlanAttempt repair_plan(const std::string& question, const std::string& failed_code,
                            const interp::StructuredError& error, int round,
                            interp::TraceRecorder& recorder);

    // <= 2 chat calls; converges to "unknown" on repeated extraction failure
    std::string answer(const std::string& query, const DocumentSet* docs,
                       interp::TraceRecorder& recorder);

private:
    llm::ChatClient& client_;
    AgentConfig config_;

    std::string chat_logged(const std::vector<llm::ChatMessage>& messages,
                            const llm::GenerationParams& params,
                            const llm::CallContext& ctx,
                            interp::TraceRecorder& recorder);
    PlanAttempt parse_with_retries(std::vector<llm::ChatMessage> messages,
                                   std::string raw, const std::string& question,
                                   PlanAttempt::Kind kind, int round,
                                   interp::TraceRecorder& recorder);
};

// deterministic rendering of the {sub_queries} slot: a JSON list of strings
std::string render_sub_queries(const std::vector<std::string>& subs);

} // namespace ragexec::agents
