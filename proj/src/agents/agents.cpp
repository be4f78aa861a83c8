#include "ragexec/agents/agents.hpp"

#include <json.hpp>

#include "ragexec/dsl/token.hpp"
#include "ragexec/llm/extract.hpp"
#include "ragexec/llm/prompts.hpp"
#include "ragexec/tools/tools.hpp"

namespace ragexec::agents {

namespace {

// retry wording is artifact text, versioned with the templates
const char* kDecomposeRetryNote =
    "Your previous reply was not a valid JSON list of strings. "
    "Return ONLY a JSON list of strings, nothing else.";

const char* kAnswerRetryNote =
    "Reply using EXACTLY this format:\n<thinking> ... </thinking>\n<answer> ... "
    "</answer>";

std::string diagnostic_detail(const dsl::SyntaxDiagnostic& d) {
    std::string out = d.message + " (line " + std::to_string(d.span.line) + ", column " +
                      std::to_string(d.span.column) + ")";
    if (!d.offending_fragment.empty()) out += " near: " + d.offending_fragment;
    return out;
}

} // namespace

std::string render_sub_queries(const std::vector<std::string>& subs) {
    return nlohmann::json(subs).dump();
}

std::string AgentSet::chat_logged(const std::vector<llm::ChatMessage>& messages,
                                  const llm::GenerationParams& params,
                                  const llm::CallContext& ctx,
                                  interp::TraceRecorder& recorder) {
    std::string response = client_.chat(messages, params, ctx);
    recorder.add(interp::TraceKind::Control, "chat", {}, {ctx.template_id},
                 response.substr(0, 200));
    return response;
}

SubQueryList AgentSet::decompose(const std::string& question,
                                 interp::TraceRecorder& recorder) {
    std::vector<llm::ChatMessage> messages{
        {"system", llm::prompt_template("decompose-system")},
        {"user", llm::render_template("decompose-user", {{"query", question}})},
    };
    llm::CallContext ctx{"decompose-user", question};
    for (int attempt = 0; attempt < 3; attempt++) {
        std::string raw =
            chat_logged(messages, config_.decompose_params, ctx, recorder);
        try {
            SubQueryList out;
            out.sub_queries = llm::parse_subquery_json(raw);
            out.source = SubQueryList::Source::Parsed;
            return out;
        } catch (const llm::ParseError&) {
            messages.push_back({"assistant", raw});
            messages.push_back({"user", kDecomposeRetryNote});
        }
    }
    return SubQueryList{{question}, SubQueryList::Source::FallbackOriginal};
}

PlanAttempt AgentSet::parse_with_retries(std::vector<llm::ChatMessage> messages,
                                         std::string raw, const std::string& question,
                                         PlanAttempt::Kind kind, int round,
                                         interp::TraceRecorder& recorder) {
    dsl::SyntaxDiagnostic last{};
    for (int retry = 0; retry <= 3; retry++) {
        std::string code = dsl::strip_code_fence(raw);
        auto parsed = dsl::parse_program(code);
        if (auto* program = std::get_if<dsl::PlanProgram>(&parsed)) {
            PlanAttempt attempt;
            attempt.source_code = code;
            attempt.kind = retry == 0 ? kind : PlanAttempt::Kind::SyntaxRetry;
            attempt.round = round;
            attempt.program = std::move(*program);
            return attempt;
        }
        last = std::get<dsl::SyntaxDiagnostic>(parsed);
        if (retry == 3) break;
        messages.push_back({"assistant", raw});
        messages.push_back(
            {"user", llm::render_template("plan-syntax-repair",
                                          {{"error_detail", diagnostic_detail(last)},
                                           {"failed_code", code}})});
        raw = chat_logged(messages, config_.plan_params,
                          {"plan-syntax-repair", question}, recorder);
    }
    throw PlanFailureError(last);
}

PlanAttempt AgentSet::plan(const std::string& question, const SubQueryList& subs,
                           interp::TraceRecorder& recorder) {
    std::vector<llm::ChatMessage> messages{
        {"system", llm::prompt_template("plan-system")},
        {"user",
         llm::render_template(
             "plan-user",
             {{"original_query", question},
              {"sub_queries", render_sub_queries(subs.sub_queries)},
              {"CODE_EXAMPLE", llm::plan_code_example()}})},
    };
    std::string raw =
        chat_logged(messages, config_.plan_params, {"plan-user", question}, recorder);
    return parse_with_retries(std::move(messages), std::move(raw), question,
                              PlanAttempt::Kind::Initial, 0, recorder);
}

PlanAttempt AgentSet::repair_plan(const std::string& question,
                                  const std::string& failed_code,
                                  const interp::StructuredError& error, int round,
                                  interp::TraceRecorder& recorder) {
    std::vector<llm::ChatMessage> messages{
        {"system", llm::prompt_template("plan-system")},
        {"user",
         llm::render_template("plan-runtime-repair",
                              {{"original_query", question},
                               {"failed_code", failed_code},
                               {"error_msg", error.traceback()}})},
    };
    std::string raw = chat_logged(messages, config_.plan_params,
                                  {"plan-runtime-repair", question}, recorder);
    return parse_with_retries(std::move(messages), std::move(raw), question,
                              PlanAttempt::Kind::RuntimeRepair, round, recorder);
}

std::string AgentSet::answer(const std::string& query, const DocumentSet* docs,
                             interp::TraceRecorder& recorder) {
    bool evidence = docs != nullptr && !docs->docs.empty();
    std::string template_id = evidence ? "answer-evidence" : "answer-aggregation";
    std::string user = evidence ? "Question: " + query + "\n\nRetrieved documents:\n" +
                                      tools::format_docs(*docs)
                                : query;
    std::vector<llm::ChatMessage> messages{
        {"system", llm::prompt_template(template_id)},
        {"user", user},
    };
    llm::CallContext ctx{template_id, query};
    for (int attempt = 0; attempt < 2; attempt++) {
        std::string raw = chat_logged(messages, config_.answer_params, ctx, recorder);
        try {
            std::string span = llm::extract_answer_span(raw);
            if (!span.empty()) return span;
        } catch (const llm::ExtractionError&) {
        }
        messages.push_back({"assistant", raw});
        messages.push_back({"user", kAnswerRetryNote});
    }
    return "unknown";
}

} // namespace ragexec::agents
