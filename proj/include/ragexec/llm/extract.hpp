#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ragexec::llm {

struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Content of the first <answer>...</answer> pair, tags matched
// case-insensitively, result whitespace-trimmed. Throws ExtractionError when
// no well-formed pair exists.
std::string extract_answer_span(const std::string& raw);

// Slices from the first '[' to the last ']' and parses a JSON array of
// strings; rejects empty arrays and non-string elements.
std::vector<std::string> parse_subquery_json(const std::string& raw);

} // namespace ragexec::llm
