#include "ragexec/pipeline/pipeline.hpp"

namespace ragexec::pipeline {

namespace {

std::string clean_status(const agents::SubQueryList& subs) {
    return subs.source == agents::SubQueryList::Source::FallbackOriginal
               ? "decompose-fallback-answered"
               : "answered";
}

} // namespace

CallStats stats_from_trace(const interp::ExecutionTrace& trace) {
    CallStats stats;
    for (const auto& e : trace.entries) {
        switch (e.kind) {
            case interp::TraceKind::Control:
                if (e.source == "chat") stats.chat_calls++;
                break;
            case interp::TraceKind::ToolRetrieve:
                stats.retrieve_calls++;
                break;
            case interp::TraceKind::ToolAnswer:
                stats.answer_calls++;
                break;
            case interp::TraceKind::AdaptiveReretrieve:
                stats.retrieve_calls++;
                stats.adaptive_boosts_used++;
                break;
            case interp::TraceKind::RepairRoundStart:
                stats.repair_rounds_used++;
                break;
            default:
                break;
        }
    }
    return stats;
}

CallStats count_llm_calls(const QuestionResult& result) {
    CallStats computed = stats_from_trace(result.trace);
    if (!(computed == result.call_stats))
        throw AccountingMismatch("recorded call stats disagree with the trace for " +
                                 result.question_id);
    return computed;
}

QuestionResult run_question(const std::string& question_id,
                            const std::string& question, llm::ChatClient& client,
                            const PipelineConfig& config) {
    auto start = std::chrono::steady_clock::now();
    QuestionResult result;
    result.question_id = question_id;
    interp::TraceRecorder recorder(result.trace);

    agents::AgentSet agent_set(client, config.agent_config);
    tools::StdToolHost host(
        config.retrieve,
        [&](const std::string& q, const DocumentSet* docs,
            interp::TraceRecorder& rec) { return agent_set.answer(q, docs, rec); },
        config.sentinel, config.budget);

    int rounds_used = 0;
    try {
        agents::SubQueryList subs;
        if (config.merge_decompose_plan) {
            subs.sub_queries = {question};
            subs.source = agents::SubQueryList::Source::Parsed;
        } else {
            subs = agent_set.decompose(question, recorder);
        }

        agents::PlanAttempt attempt;
        try {
            attempt = agent_set.plan(question, subs, recorder);
        } catch (const agents::PlanFailureError& e) {
            result.status = "plan-failure";
            result.error = interp::StructuredError{
                interp::ErrorKind::SyntaxError, e.diagnostic.message,
                e.diagnostic.span, e.diagnostic.offending_fragment};
            result.call_stats = stats_from_trace(result.trace);
            result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            return result;
        }

        // Algorithm main loop: execute, and on a structured runtime error hand
        // the traceback back to the planner for up to T full re-executions.
        for (int t = 0;; t++) {
            recorder.set_repair_round(t);
            interp::ExecutionOutcome outcome =
                interp::execute(attempt.program, host, config.limits, recorder);
            if (!outcome.error) {
                result.status = clean_status(subs);
                result.predicted_answer = outcome.final_answer
                                              ? *outcome.final_answer
                                              : render_str(outcome.final_value);
                break;
            }
            result.error = outcome.error;
            if (outcome.error->kind == interp::ErrorKind::ToolFailure) {
                result.status = "tool-failure";
                break;
            }
            if (t >= config.max_repair_rounds) {
                result.status = "program-error";
                break;
            }
            rounds_used = t + 1;
            recorder.set_repair_round(rounds_used);
            recorder.add(interp::TraceKind::RepairRoundStart, "pipeline", {},
                         {to_string(outcome.error->kind)}, outcome.error->message);
            try {
                attempt = agent_set.repair_plan(question, attempt.source_code,
                                                *outcome.error, rounds_used, recorder);
            } catch (const agents::PlanFailureError& e) {
                result.status = "plan-failure";
                result.error = interp::StructuredError{
                    interp::ErrorKind::SyntaxError, e.diagnostic.message,
                    e.diagnostic.span, e.diagnostic.offending_fragment};
                break;
            }
        }
    } catch (const interp::ToolError& e) {
        result.status = "tool-failure";
        result.error = interp::StructuredError{interp::ErrorKind::ToolFailure,
                                               e.what(), {}, ""};
    } catch (const std::exception& e) {
        result.status = "program-error";
        result.error = interp::StructuredError{interp::ErrorKind::UnsupportedConstruct,
                                               e.what(), {}, ""};
    }

    result.call_stats = stats_from_trace(result.trace);
    result.call_stats.repair_rounds_used = rounds_used;
    count_llm_calls(result); // self-check: recorded stats must match the trace
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

} // namespace ragexec::pipeline
