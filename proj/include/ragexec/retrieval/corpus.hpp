#pragma once

#include <string>
#include <vector>

namespace ragexec::retrieval {

struct CorpusDoc {
    std::string id;
    std::string title;
    std::string text;
};

// Line-delimited JSON, fields id/title/text. Throws std::runtime_error with
// the offending line number on malformed input.
std::vector<CorpusDoc> load_corpus(const std::string& path);

} // namespace ragexec::retrieval
