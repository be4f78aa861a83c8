#pragma once

#include <string>
#include <vector>

namespace ragexec::eval {

// lowercase, drop articles (a/an/the) and "and" as whole words, strip punctuation,
// collapse whitespace — the conventional open-domain QA normalization
std::string normalize_answer(const std::string& text);

int exact_match(const std::string& pred, const std::vector<std::string>& golds);

// token-overlap F1 with multiset intersection, max over golds
double token_f1(const std::string& pred, const std::vector<std::string>& golds);

// 0.7 * F1 + 0.3 * EM
double reward(const std::string& pred, const std::vector<std::string>& golds);

} // namespace ragexec::eval
