#include "ragexec/eval/failure.hpp"

#include <algorithm>
#include <cctype>

#include "ragexec/eval/metrics.hpp"

namespace ragexec::eval {

namespace {

std::string trim_lower(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
    std::string out = s.substr(b, e - b);
    for (char& c : out) c = std::tolower(static_cast<unsigned char>(c));
    return out;
}

bool equals_sentinel(const std::string& answer, const tools::SentinelPolicy& policy) {
    std::string probe = trim_lower(answer);
    return std::find(policy.phrases.begin(), policy.phrases.end(), probe) !=
           policy.phrases.end();
}

} // namespace

std::string to_string(const FailureCategory& category) {
    switch (category.kind) {
        case FailureCategory::Kind::NotAFailure: return "not-a-failure";
        case FailureCategory::Kind::RetrievalMissing: return "retrieval-missing";
        case FailureCategory::Kind::IntermediateErrorPropagation:
            return "intermediate-error-propagation";
        case FailureCategory::Kind::FinalRefusal: return "final-refusal";
        case FailureCategory::Kind::ProgramError:
            return "program-error:" + category.program_error_kind;
    }
    return "not-a-failure";
}

FailureCategory categorize_failure(const pipeline::QuestionResult& result,
                                   const std::vector<std::string>& golds,
                                   const tools::SentinelPolicy& policy) {
    FailureCategory category;
    std::string predicted = result.predicted_answer.value_or("");
    if (!golds.empty() && exact_match(predicted, golds) == 1) {
        category.kind = FailureCategory::Kind::NotAFailure;
        return category;
    }

    if (result.status == "program-error" || result.status == "plan-failure" ||
        result.status == "tool-failure") {
        category.kind = FailureCategory::Kind::ProgramError;
        category.program_error_kind =
            result.error ? to_string(result.error->kind) : "UnknownError";
        return category;
    }

    // Ran clean but the final aggregation returned a sentinel: Unknown-Error
    // bucket when the answer *is* a sentinel phrase, final refusal when it
    // merely wraps one in refusal prose.
    if (equals_sentinel(predicted, policy)) {
        category.kind = FailureCategory::Kind::ProgramError;
        category.program_error_kind = "UnknownError";
        return category;
    }
    if (tools::is_sentinel(predicted, policy)) {
        category.kind = FailureCategory::Kind::FinalRefusal;
        return category;
    }

    // A sentinel interpolated into a later tool query means an intermediate
    // step failed and its error propagated downstream.
    const auto& entries = result.trace.entries;
    int last_answer = -1;
    for (int i = 0; i < static_cast<int>(entries.size()); i++)
        if (entries[i].kind == interp::TraceKind::ToolAnswer) last_answer = i;
    for (int i = 0; i < static_cast<int>(entries.size()); i++) {
        const auto& e = entries[i];
        bool is_query_entry = e.kind == interp::TraceKind::ToolRetrieve ||
                              (e.kind == interp::TraceKind::ToolAnswer &&
                               i != last_answer);
        if (!is_query_entry || e.inputs.empty()) continue;
        std::string query = trim_lower(e.inputs[0]);
        for (const auto& phrase : policy.phrases) {
            if (query.find(phrase) != std::string::npos) {
                category.kind = FailureCategory::Kind::IntermediateErrorPropagation;
                return category;
            }
        }
    }

    // Gold-in-docs check: normalized containment of any gold in any doc text
    // captured by the trace's retrieve entries.
    bool gold_seen = false;
    for (const auto& e : entries) {
        if (e.kind != interp::TraceKind::ToolRetrieve &&
            e.kind != interp::TraceKind::AdaptiveReretrieve)
            continue;
        // retrieve-entry inputs are {query, k, text...}; boost entries are
        // {query, first-answer, text...}
        for (std::size_t i = 2; i < e.inputs.size() && !gold_seen; i++) {
            std::string haystack = normalize_answer(e.inputs[i]);
            for (const auto& g : golds) {
                std::string needle = normalize_answer(g);
                if (!needle.empty() && haystack.find(needle) != std::string::npos) {
                    gold_seen = true;
                    break;
                }
            }
        }
        if (gold_seen) break;
    }

    category.kind = FailureCategory::Kind::RetrievalMissing;
    category.low_confidence = gold_seen; // residual bucket: evidence was there
    return category;
}

} // namespace ragexec::eval
