#include "ragexec/tools/tools.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace ragexec::tools {

namespace {

std::string trim_lower(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
    std::string out = s.substr(b, e - b);
    for (char& c : out) c = std::tolower(static_cast<unsigned char>(c));
    return out;
}

std::string doc_id_list(const DocumentSet& docs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < docs.docs.size(); i++) {
        if (i) out << ",";
        out << docs.docs[i].doc_id;
    }
    return out.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

} // namespace

bool is_sentinel(const std::string& answer, const SentinelPolicy& policy) {
    std::string probe = trim_lower(answer);
    if (probe.empty()) return false;
    return std::any_of(policy.phrases.begin(), policy.phrases.end(),
                       [&](const std::string& p) {
                           return probe.find(p) != std::string::npos;
                       });
}

std::string format_docs(const DocumentSet& docs) {
    if (docs.docs.empty())
        throw std::invalid_argument("format_docs: empty document set");
    std::ostringstream out;
    for (std::size_t i = 0; i < docs.docs.size(); i++) {
        if (i) out << "\n\n";
        out << "[Doc " << i + 1 << "]\n" << docs.docs[i].text;
    }
    return out.str();
}

DocumentSet StdToolHost::retrieve(const std::string& query, std::optional<int> topk,
                                  interp::TraceRecorder& recorder) {
    std::string trimmed = query;
    if (trim_lower(trimmed).empty())
        throw interp::ToolError("retrieve(): query is empty");
    int k = topk.value_or(budget_.default_k);
    if (k < 1 || k > 100)
        throw interp::ToolError("retrieve(): k must be in [1, 100], got " +
                                std::to_string(k));
    auto start = std::chrono::steady_clock::now();
    DocumentSet docs = retrieve_(query, k);
    docs.query = query;
    docs.k = k;
    // inputs carry the query, k, then each retrieved text so downstream
    // analysis (gold-in-docs checks) can work from the trace alone
    std::vector<std::string> inputs{query, std::to_string(k)};
    for (const auto& d : docs.docs) inputs.push_back(d.text);
    int step = recorder.add(interp::TraceKind::ToolRetrieve, "retrieve", {},
                            std::move(inputs), doc_id_list(docs), k);
    recorder.trace().entries[step].ms = elapsed_ms(start);
    return docs;
}

std::string StdToolHost::answer(const std::string& query, const DocumentSet* docs,
                                interp::TraceRecorder& recorder) {
    if (trim_lower(query).empty()) throw interp::ToolError("answer(): query is empty");
    auto start = std::chrono::steady_clock::now();
    std::string first = answer_(query, docs, recorder);
    int step = recorder.add(interp::TraceKind::ToolAnswer, "answer", {}, {query}, first,
                            docs ? std::optional<int>(docs->k) : std::nullopt);
    recorder.trace().entries[step].ms = elapsed_ms(start);

    // Execution-driven adaptive retrieval: a sentinel answer over an
    // under-budget retrieval earns exactly one re-retrieval at the boosted k,
    // with the query preserved byte-for-byte.
    if (!docs || !is_sentinel(first, policy_) || docs->k >= budget_.boosted_k)
        return first;

    auto boost_start = std::chrono::steady_clock::now();
    DocumentSet boosted = retrieve_(docs->query, budget_.boosted_k);
    boosted.query = docs->query;
    boosted.k = budget_.boosted_k;
    std::string second = answer_(query, &boosted, recorder);
    std::vector<std::string> boost_inputs{docs->query, first};
    for (const auto& d : boosted.docs) boost_inputs.push_back(d.text);
    int boost_step =
        recorder.add(interp::TraceKind::AdaptiveReretrieve, "answer",
                     {}, std::move(boost_inputs), second, budget_.boosted_k);
    recorder.trace().entries[boost_step].ms = elapsed_ms(boost_start);
    return second;
}

} // namespace ragexec::tools
