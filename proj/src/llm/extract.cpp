#include "ragexec/llm/extract.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace ragexec::llm {

namespace {

std::size_t find_ci(const std::string& haystack, const std::string& lowered_needle,
                    std::size_t from) {
    if (lowered_needle.empty() || haystack.size() < lowered_needle.size())
        return std::string::npos;
    for (std::size_t i = from; i + lowered_needle.size() <= haystack.size(); i++) {
        bool hit = true;
        for (std::size_t j = 0; j < lowered_needle.size(); j++) {
            if (std::tolower(static_cast<unsigned char>(haystack[i + j])) !=
                lowered_needle[j]) {
                hit = false;
                break;
            }
        }
        if (hit) return i;
    }
    return std::string::npos;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
    return s.substr(b, e - b);
}

} // namespace

std::string extract_answer_span(const std::string& raw) {
    std::size_t open = find_ci(raw, "<answer>", 0);
    if (open == std::string::npos)
        throw ExtractionError("no <answer> tag in model output");
    std::size_t body = open + 8;
    std::size_t close = find_ci(raw, "</answer>", body);
    if (close == std::string::npos)
        throw ExtractionError("unterminated <answer> tag in model output");
    return trim(raw.substr(body, close - body));
}

std::vector<std::string> parse_subquery_json(const std::string& raw) {
    std::size_t open = raw.find('[');
    std::size_t close = raw.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("no JSON array found in: " + raw.substr(0, 200));
    std::string slice = raw.substr(open, close - open + 1);
    nlohmann::json j = nlohmann::json::parse(slice, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw ParseError("not a JSON array: " + slice.substr(0, 200));
    if (j.empty()) throw ParseError("empty sub-query list");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string())
            throw ParseError("sub-query list contains a non-string: " +
                             slice.substr(0, 200));
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace ragexec::llm
