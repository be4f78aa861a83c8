#pragma once

#include <string>
#include <vector>

namespace ragexec {

struct RetrievedDoc {
    std::string doc_id;
    std::string title;
    std::string text;
    double score = 0.0;
};

// Rank-ordered retrieval result; retains the query and k that produced it so
// the adaptive-retrieval branch can reissue the same query at a larger k.
struct DocumentSet {
    std::string query;
    int k = 0;
    std::vector<RetrievedDoc> docs;
};

} // namespace ragexec
