#include "ragexec/eval/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ragexec::eval {

std::string normalize_answer(const std::string& text) {
    std::string lowered;
    lowered.reserve(text.size());
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::ispunct(u)) continue; // strip ASCII punctuation
        lowered += std::tolower(u);
    }
    std::istringstream in(lowered);
    std::string word, out;
    while (in >> word) {
        if (word == "a" || word == "an" || word == "the" || word == "and") continue;
        if (!out.empty()) out += ' ';
        out += word;
    }
    return out;
}

namespace {

std::vector<std::string> norm_tokens(const std::string& s) {
    std::istringstream in(normalize_answer(s));
    std::vector<std::string> tokens;
    std::string word;
    while (in >> word) tokens.push_back(word);
    return tokens;
}

double f1_single(const std::vector<std::string>& pred,
                 const std::vector<std::string>& gold) {
    if (pred.empty() && gold.empty()) return 1.0;
    if (pred.empty() || gold.empty()) return 0.0;
    std::map<std::string, int> counts;
    for (const auto& t : gold) counts[t]++;
    int overlap = 0;
    for (const auto& t : pred) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            it->second--;
            overlap++;
        }
    }
    if (overlap == 0) return 0.0;
    double p = static_cast<double>(overlap) / pred.size();
    double r = static_cast<double>(overlap) / gold.size();
    return 2.0 * p * r / (p + r);
}

} // namespace

int exact_match(const std::string& pred, const std::vector<std::string>& golds) {
    std::string n = normalize_answer(pred);
    return std::any_of(golds.begin(), golds.end(),
                       [&](const std::string& g) { return normalize_answer(g) == n; })
               ? 1
               : 0;
}

double token_f1(const std::string& pred, const std::vector<std::string>& golds) {
    auto p = norm_tokens(pred);
    double best = 0.0;
    for (const auto& g : golds) best = std::max(best, f1_single(p, norm_tokens(g)));
    return best;
}

double reward(const std::string& pred, const std::vector<std::string>& golds) {
    return 0.7 * token_f1(pred, golds) + 0.3 * exact_match(pred, golds);
}

} // namespace ragexec::eval
