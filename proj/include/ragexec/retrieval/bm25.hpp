#pragma once

#include <map>
#include <string>
#include <vector>

#include "ragexec/retrieval/corpus.hpp"
#include "ragexec/retrieval/doc.hpp"

namespace ragexec::retrieval {

// lowercase, strip non-alphanumerics, split on whitespace
std::vector<std::string> tokenize(const std::string& text);

// BM25 (k1 = 1.2, b = 0.75) over title+text, ties broken by doc-id ascending.
class LexicalIndex {
public:
    static LexicalIndex build(std::vector<CorpusDoc> corpus);
    static LexicalIndex build_from_file(const std::string& corpus_path);

    DocumentSet search(const std::string& query, int k) const;

    void save(const std::string& path) const;
    static LexicalIndex load(const std::string& path);

    std::size_t size() const { return corpus_.size(); }
    double average_doc_length() const { return avg_len_; }

private:
    std::vector<CorpusDoc> corpus_;
    std::vector<int> doc_lengths_;
    std::map<std::string, std::vector<std::pair<int, int>>> postings_; // term -> (doc idx, tf)
    double avg_len_ = 0.0;

    void finish();
};

} // namespace ragexec::retrieval
