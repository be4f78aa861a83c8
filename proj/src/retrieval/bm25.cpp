#include "ragexec/retrieval/bm25.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace ragexec::retrieval {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || u >= 0x80) {
            cur += std::tolower(u);
        } else if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

LexicalIndex LexicalIndex::build(std::vector<CorpusDoc> corpus) {
    LexicalIndex index;
    index.corpus_ = std::move(corpus);
    index.finish();
    return index;
}

LexicalIndex LexicalIndex::build_from_file(const std::string& corpus_path) {
    return build(load_corpus(corpus_path));
}

void LexicalIndex::finish() {
    doc_lengths_.clear();
    postings_.clear();
    long long total = 0;
    for (int i = 0; i < static_cast<int>(corpus_.size()); i++) {
        auto tokens = tokenize(corpus_[i].title + " " + corpus_[i].text);
        doc_lengths_.push_back(static_cast<int>(tokens.size()));
        total += static_cast<long long>(tokens.size());
        std::unordered_map<std::string, int> tf;
        for (const auto& t : tokens) tf[t]++;
        for (const auto& [term, count] : tf) postings_[term].emplace_back(i, count);
    }
    avg_len_ = corpus_.empty() ? 0.0 : static_cast<double>(total) / corpus_.size();
}

DocumentSet LexicalIndex::search(const std::string& query, int k) const {
    DocumentSet result;
    result.query = query;
    result.k = k;
    if (corpus_.empty() || k <= 0) return result;

    const double k1 = 1.2, b = 0.75;
    const double n = static_cast<double>(corpus_.size());
    std::unordered_map<int, double> scores;
    for (const auto& term : tokenize(query)) {
        auto it = postings_.find(term);
        if (it == postings_.end()) continue;
        double df = static_cast<double>(it->second.size());
        double idf = std::log((n - df + 0.5) / (df + 0.5) + 1.0);
        for (const auto& [doc, tf] : it->second) {
            double norm = k1 * (1.0 - b + b * doc_lengths_[doc] / avg_len_);
            scores[doc] += idf * (tf * (k1 + 1.0)) / (tf + norm);
        }
    }

    std::vector<std::pair<int, double>> ranked(scores.begin(), scores.end());
    std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b2) {
        if (a.second != b2.second) return a.second > b2.second;
        return corpus_[a.first].id < corpus_[b2.first].id;
    });
    for (const auto& [doc, score] : ranked) {
        if (static_cast<int>(result.docs.size()) >= k) break;
        result.docs.push_back(
            {corpus_[doc].id, corpus_[doc].title, corpus_[doc].text, score});
    }
    return result;
}

void LexicalIndex::save(const std::string& path) const {
    nlohmann::json j;
    auto& docs = j["docs"] = nlohmann::json::array();
    for (const auto& d : corpus_)
        docs.push_back({{"id", d.id}, {"title", d.title}, {"text", d.text}});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write index file: " + path);
    out << j.dump();
}

LexicalIndex LexicalIndex::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open index file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed index file " + path + ": " + e.what());
    }
    std::vector<CorpusDoc> corpus;
    for (const auto& d : j.at("docs"))
        corpus.push_back({d.at("id").get<std::string>(), d.at("title").get<std::string>(),
                          d.at("text").get<std::string>()});
    return build(std::move(corpus));
}

} // namespace ragexec::retrieval
