#include "ragexec/retrieval/corpus.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace ragexec::retrieval {

std::vector<CorpusDoc> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<CorpusDoc> docs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("corpus line " + std::to_string(lineno) +
                                     " is not valid JSON: " + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("title") ||
            !j.contains("text") || !j["id"].is_string() || !j["title"].is_string() ||
            !j["text"].is_string())
            throw std::runtime_error("corpus line " + std::to_string(lineno) +
                                     " missing id/title/text string fields");
        docs.push_back({j["id"].get<std::string>(), j["title"].get<std::string>(),
                        j["text"].get<std::string>()});
    }
    return docs;
}

} // namespace ragexec::retrieval
