#include "ragexec/llm/prompts.hpp"

#include <map>
#include <stdexcept>

namespace ragexec::llm {

namespace {

const std::string kDecomposeSystem = R"PT(You are a question decomposition agent for multi-hop QA.
Break a complex question into a minimal list of atomic single-hop
sub-queries. Each sub-query should be independently answerable by a
search engine. Return a JSON list of strings ONLY. No explanation,
no markdown, no extra text.)PT";

const std::string kDecomposeUser = R"PT(Original question:
{query}

Return a JSON list of atomic sub-queries. Example:
["Who directed Inception?",
 "Who directed Jurassic Park?",
 "When was Christopher Nolan born?"])PT";

const std::string kPlanSystem = R"PT(You are a planning agent that writes Python code to answer questions
via RAG.

You have exactly two functions available:

  retrieve(query: str) -> List[str]
      Searches a retrieval system and returns a list of relevant
      document strings. Do NOT pass a topk argument; the retrieval
      count is controlled externally.

  answer(query: str, docs: List[str]) -> str
      Calls an LLM to answer a question given a list of documents.
      Returns ONLY the short text inside the model's <answer>...
      </answer> block (the runtime extracts it). Use that return
      value directly in f-strings -- it is a short phrase, not the
      full model reply.

  answer(query: str) -> str  (no docs -- aggregation / synthesis mode)
      Same as above but with NO documents. The model answers using
      ONLY the information already present in the query string. Use
      this for the FINAL aggregation step.

Rules:
- Use retrieve() + answer() step by step to answer each sub-query.
- If you call retrieve() for a sub-question, pass that return value
  into the matching answer() for that sub-question.
- Build on intermediate answers by interpolating them into later
  queries using f-strings.
- Variable names MUST be valid Python identifiers: only letters,
  digits, and underscores, NO spaces.
- Every variable you reference MUST be assigned BEFORE it is used.
- Do NOT parse answer() return values in generated code (no .split(),
  regex, or indexing). The runtime already returns the short <answer>
  span.
- If you use a for/if/while block that might conditionally set
  final_answer, initialise final_answer = "" BEFORE the block.
- The last line of your code MUST be:
      final_answer = answer(<synthesis question>)
  Do NOT pass docs to this final answer() call -- aggregation only.
- NEVER use an f-string or string concatenation as final_answer.
  final_answer MUST ALWAYS be the return value of an answer() call.
- CRITICAL: The <synthesis question> must use this TWO-PART format:
    "Given: <fact1>, <fact2>, ...
     Answer the question: <ORIGINAL QUESTION>"
  where the first part lists intermediate results as background facts
  and the second part REPEATS the ORIGINAL question VERBATIM after
  "Answer the question:". Do NOT rephrase the original question or
  embed intermediate answers INTO the question itself.
  BAD:  f"Which American director, {name}, who is {nationality},
         hosted ...?"  (answer leaks into the question)
  GOOD: f"Given: {name} hosted the event, {name} is {nationality}.
         Answer the question: Which American director hosted ...?"
- Valid Python 3 only: use ASCII double or single quotes for strings;
  never put backticks around variable names or expressions.
- Return ONLY the Python code, no explanation, no imports, no markdown.)PT";

const std::string kPlanUser = R"PT(Original question:
{original_query}

Sub-queries to resolve:
{sub_queries}

Reference example (do NOT copy, write code for the actual question
above):
{CODE_EXAMPLE}

Now write the Python code for the original question.
End with: final_answer = answer(f"Given: <facts>.
                                  Answer the question: {original_query}"))PT";

const std::string kCodeExample = R"PT(# Example for: "Who was born earlier, the director of
# Inception or Jurassic Park?"
docs1 = retrieve("Who directed Inception?")
director1 = answer("Who directed Inception?", docs1)

docs2 = retrieve("Who directed Jurassic Park?")
director2 = answer("Who directed Jurassic Park?", docs2)

docs3 = retrieve(f"When was {director1} born?")
birth1 = answer(f"When was {director1} born?", docs3)

docs4 = retrieve(f"When was {director2} born?")
birth2 = answer(f"When was {director2} born?", docs4)

# ALWAYS end with answer() -- list facts first,
# then repeat the ORIGINAL question verbatim
final_answer = answer(
    f"Given: {director1} directed Inception and was born {birth1}, "
    f"{director2} directed Jurassic Park and was born {birth2}. "
    f"Answer the question: Who was born earlier, the director of "
    f"Inception or Jurassic Park?"
))PT";

const std::string kPlanSyntaxRepair = R"PT(---
Your previous output is NOT valid Python (syntax error).
Details: {error_detail}

Fix it. Use only ASCII ' or " for strings; never wrap variable names
in backticks; output code only.

Previous attempt:
```python
{failed_code}
```
Return ONLY corrected Python code.)PT";

const std::string kPlanRuntimeRepair = R"PT(The following Python code was generated to answer the question but
raised a runtime error. Fix the code so it runs correctly. Return
ONLY the corrected Python code.

=== Original question ===
{original_query}

=== Failing code ===
{failed_code}

=== Runtime error ===
{error_msg}

=== Fix instructions ===
- Do not parse answer() return values in generated code; the runtime
  returns short <answer> text.
- Every variable you reference must be explicitly assigned earlier.
- If retrieve() was called, pass its docs into answer(); do not use
  answer(..., []) for that step.
- Initialise final_answer = "" before any loop/conditional that
  might set it.
- The last line MUST be: final_answer = answer(<synthesis question>)
  -- call answer() with NO docs to aggregate all intermediate
  results. NEVER use an f-string or string as final_answer directly.)PT";

const std::string kAnswerEvidence = R"PT(You are given a question and retrieved documents.
You MUST answer using ONLY information from the retrieved documents.
Even for yes/no questions, decide yes or no by reasoning from facts
in the documents.

Output format (STRICT):
<thinking> ... </thinking>
<answer> ... </answer>

Evidence citation rule:
- Whenever you use evidence from the documents in your reasoning,
  you MUST cite it inline as Doc [i] (matching the document indices
  shown in the retrieved block, e.g. [Doc 1] -> Doc [1]).
- Only cite documents that are actually relevant.
- Keep <thinking> concise (1-3 sentences).

Answer rules:
- The <answer> should be a short phrase, preferably taken directly
  from the documents when possible.
- Match the answer TYPE to the QUESTION:
    WHO / which person / born first / earlier
        -> a person's NAME in <answer>, not only a date;
    WHEN -> date or time;
    yes/no -> exactly yes / no / unknown when the documents do not
              support a definite answer.
- Do NOT output anything outside <thinking> and <answer>.

Example (do NOT copy the content, only follow the style):
<thinking>Doc [1] states that Future Ted serves as the
narrator, and Doc [4] confirms the voice actor.</thinking>
<answer> Ted Mosby </answer>)PT";

const std::string kAnswerAggregation = R"PT(There are NO retrieved documents. The question text itself contains
background facts (after 'Given:') and the actual question to answer
(after 'Answer the question:').
You MUST use the provided facts to answer the ACTUAL QUESTION.

CRITICAL: Your job is to ANSWER the question, NOT to confirm whether
the facts are true.
- If the question asks WHO / WHICH person -> reply with a person's NAME.
- If the question asks WHEN -> reply with a date or time.
- If the question asks WHERE -> reply with a place.
- ONLY answer yes/no when the question is explicitly a yes/no question
  (e.g. 'Are both ...?', 'Is it true ...?').
- NEVER answer 'yes' or 'no' to a WHO/WHICH/WHEN/WHERE question.

Output format (STRICT):
<thinking> ... </thinking>
<answer> ... </answer>

- In <thinking>, identify the actual question type and
  combine the given facts to produce the answer (1-2 sentences).
- The <answer> must directly answer the question -- a name, date,
  place, etc. -- NOT 'yes' or 'no' unless the question is truly
  yes/no.
- Do NOT output anything outside <thinking> and <answer>.)PT";

struct TemplateInfo {
    const std::string* body;
    std::vector<std::string> placeholders;
};

const std::map<std::string, TemplateInfo>& registry() {
    static const std::map<std::string, TemplateInfo> table = {
        {"decompose-system", {&kDecomposeSystem, {}}},
        {"decompose-user", {&kDecomposeUser, {"query"}}},
        {"plan-system", {&kPlanSystem, {}}},
        {"plan-user", {&kPlanUser, {"original_query", "sub_queries", "CODE_EXAMPLE"}}},
        {"plan-syntax-repair", {&kPlanSyntaxRepair, {"error_detail", "failed_code"}}},
        {"plan-runtime-repair",
         {&kPlanRuntimeRepair, {"original_query", "failed_code", "error_msg"}}},
        {"answer-evidence", {&kAnswerEvidence, {}}},
        {"answer-aggregation", {&kAnswerAggregation, {}}},
    };
    return table;
}

void replace_all(std::string& body, const std::string& slot, const std::string& value) {
    std::size_t at = 0;
    while ((at = body.find(slot, at)) != std::string::npos) {
        body.replace(at, slot.size(), value);
        at += value.size();
    }
}

} // namespace

const std::vector<std::string>& template_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, info] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

const std::string& prompt_template(const std::string& template_id) {
    auto it = registry().find(template_id);
    if (it == registry().end())
        throw std::runtime_error("unknown prompt template: " + template_id);
    return *it->second.body;
}

const std::string& plan_code_example() { return kCodeExample; }

std::string render_template(
    const std::string& template_id,
    const std::vector<std::pair<std::string, std::string>>& values) {
    auto it = registry().find(template_id);
    if (it == registry().end())
        throw std::runtime_error("unknown prompt template: " + template_id);
    const TemplateInfo& info = it->second;
    std::string body = *info.body;
    for (const auto& [key, value] : values) {
        bool declared = false;
        for (const auto& p : info.placeholders) declared |= p == key;
        if (!declared)
            throw std::runtime_error("template " + template_id +
                                     " has no placeholder {" + key + "}");
        replace_all(body, "{" + key + "}", value);
    }
    for (const auto& p : info.placeholders)
        if (body.find("{" + p + "}") != std::string::npos)
            throw std::runtime_error("template " + template_id +
                                     " placeholder {" + p + "} left unfilled");
    return body;
}

} // namespace ragexec::llm
