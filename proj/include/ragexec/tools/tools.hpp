#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ragexec/interp/interpreter.hpp"
#include "ragexec/retrieval/doc.hpp"

namespace ragexec::tools {

struct SentinelPolicy {
    std::vector<std::string> phrases{"unknown", "cannot answer",
                                     "not enough information", "no information"};
};

// true iff the trimmed, lowercased answer contains any sentinel phrase
bool is_sentinel(const std::string& answer, const SentinelPolicy& policy);

struct RetrievalBudget {
    int default_k = 5; // k0
    int boosted_k = 10; // k1, must exceed k0
};

// [Doc 1]\n<text>\n\n[Doc 2]\n<text> ... no trailing blank line
std::string format_docs(const DocumentSet& docs);

// Tool host backed by pluggable retrieval and answer callables. Stateless per
// question: all accounting flows through the TraceRecorder it is handed.
class StdToolHost : public interp::ToolHost {
public:
    using RetrieveFn = std::function<DocumentSet(const std::string&, int)>;
    using AnswerFn = std::function<std::string(
        const std::string&, const DocumentSet*, interp::TraceRecorder&)>;

    StdToolHost(RetrieveFn retrieve, AnswerFn answer, SentinelPolicy policy = {},
                RetrievalBudget budget = {})
        : retrieve_(std::move(retrieve)), answer_(std::move(answer)),
          policy_(std::move(policy)), budget_(budget) {}

    DocumentSet retrieve(const std::string& query, std::optional<int> topk,
                                    interp::TraceRecorder& recorder) override;
    std::string answer(const std::string& query, const DocumentSet* docs,
                       interp::TraceRecorder& recorder) override;

    const RetrievalBudget& budget() const { return budget_; }
    const SentinelPolicy& policy() const { return policy_; }

private:
    RetrieveFn retrieve_;
    AnswerFn answer_;
    SentinelPolicy policy_;
    RetrievalBudget budget_;
};

} // namespace ragexec::tools
