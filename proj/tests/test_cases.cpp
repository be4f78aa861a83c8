// End-to-end fixture scenarios: four clean multi-hop runs and five
// characteristic failure shapes, driven by scripted chat transcripts over
// the 200-document fixture corpus.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <string>

#include "ragexec/eval/failure.hpp"
#include "ragexec/eval/metrics.hpp"
#include "ragexec/pipeline/pipeline.hpp"
#include "ragexec/retrieval/bm25.hpp"

using namespace ragexec;

namespace {

const retrieval::LexicalIndex& index_fixture() {
    static retrieval::LexicalIndex index = retrieval::LexicalIndex::build_from_file(
        std::string(TESTS_DATA_DIR) + "/corpus.jsonl");
    return index;
}

pipeline::PipelineConfig make_config(int max_repair_rounds = 3) {
    pipeline::PipelineConfig config;
    config.merge_decompose_plan = true;
    config.max_repair_rounds = max_repair_rounds;
    config.retrieve = [](const std::string& query, int k) {
        return index_fixture().search(query, k);
    };
    return config;
}

void load_replay(llm::ReplayChatClient& client) {
    client.load_file(std::string(TESTS_DATA_DIR) + "/replay/cases.jsonl");
}

int count_entries(const interp::ExecutionTrace& trace, interp::TraceKind kind) {
    return static_cast<int>(
        std::count_if(trace.entries.begin(), trace.entries.end(),
                      [&](const auto& e) { return e.kind == kind; }));
}

const interp::TraceEntry* find_query(const interp::ExecutionTrace& trace,
                                     interp::TraceKind kind,
                                     const std::string& query) {
    for (const auto& e : trace.entries)
        if (e.kind == kind && !e.inputs.empty() && e.inputs[0] == query) return &e;
    return nullptr;
}

std::string category_of(const pipeline::QuestionResult& result,
                        const std::vector<std::string>& golds,
                        eval::FailureCategory* out = nullptr) {
    eval::FailureCategory category =
        eval::categorize_failure(result, golds, tools::SentinelPolicy{});
    if (out) *out = category;
    return to_string(category);
}

} // namespace

TEST_CASE("clean scenarios resolve within the runtime budget") {
    auto start = std::chrono::steady_clock::now();

    SUBCASE("two-hop chain threads variables between steps") {
        llm::ReplayChatClient client;
        load_replay(client);
        auto result = pipeline::run_question(
            "case-a",
            "2014 S/S is the debut album of a South Korean boy group that "
            "was formed by who?",
            client, make_config());
        CHECK(result.status == "answered");
        REQUIRE(result.predicted_answer.has_value());
        CHECK(*result.predicted_answer == "YG Entertainment");
        pipeline::CallStats want{4, 2, 3, 0, 0};
        CHECK(pipeline::count_llm_calls(result) == want);
        // the second hop's query embeds the first hop's answer
        CHECK(find_query(result.trace, interp::TraceKind::ToolRetrieve,
                         "Which company formed WINNER?") != nullptr);
    }

    SUBCASE("sentinel at k=5 earns exactly one boosted re-retrieval at k=10") {
        llm::ReplayChatClient client;
        load_replay(client);
        auto result = pipeline::run_question(
            "case-b",
            "Which other Mexican Formula One race car driver has held the "
            "podium besides the Force India driver born in 1990?",
            client, make_config());
        CHECK(result.status == "answered");
        REQUIRE(result.predicted_answer.has_value());
        CHECK(*result.predicted_answer == "Pedro Rodríguez");
        pipeline::CallStats want{6, 4, 4, 0, 1};
        CHECK(pipeline::count_llm_calls(result) == want);

        REQUIRE(count_entries(result.trace, interp::TraceKind::AdaptiveReretrieve) ==
                1);
        const auto* boost = find_query(result.trace,
                                       interp::TraceKind::AdaptiveReretrieve,
                                       "Force India driver born in 1990");
        REQUIRE(boost != nullptr);
        CHECK(boost->k == 10);
        CHECK(boost->inputs.at(1) == "unknown"); // the first, sentinel answer
        CHECK(boost->output == "Pedro Rodríguez and Sergio Pérez");
        // the re-retrieval reuses the original query byte-for-byte
        const auto* original = find_query(result.trace,
                                          interp::TraceKind::ToolRetrieve,
                                          "Force India driver born in 1990");
        REQUIRE(original != nullptr);
        CHECK(original->k == 5);
        CHECK(original->inputs[0] == boost->inputs[0]);
    }

    SUBCASE("boolean grid is decided by the program, not the answer agent") {
        llm::ReplayChatClient client;
        load_replay(client);
        auto result = pipeline::run_question(
            "case-c",
            "Are Freakonomics and In the Realm of the Hackers both American "
            "documentaries?",
            client, make_config());
        CHECK(result.status == "answered");
        REQUIRE(result.predicted_answer.has_value());
        CHECK(*result.predicted_answer == "no");
        CHECK(eval::exact_match(*result.predicted_answer, {"no"}) == 1);
        pipeline::CallStats want{5, 4, 4, 0, 0};
        CHECK(pipeline::count_llm_calls(result) == want);
        // no aggregation chat happened: the conjunction ran in the program
        const auto* probe = find_query(result.trace, interp::TraceKind::ToolAnswer,
                                       "Is Freakonomics is a documentary?");
        REQUIRE(probe != nullptr);
        CHECK(probe->output == "no");
    }

    SUBCASE("arithmetic over retrieved years happens in the interpreter") {
        llm::ReplayChatClient client;
        load_replay(client);
        auto result = pipeline::run_question(
            "case-d",
            "How old was Virginia Bruce when she starred in Let Freedom Ring?",
            client, make_config());
        CHECK(result.status == "answered");
        REQUIRE(result.predicted_answer.has_value());
        CHECK(*result.predicted_answer == "29");
        pipeline::CallStats want{3, 2, 2, 0, 0};
        CHECK(pipeline::count_llm_calls(result) == want);
    }

    auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 5);
}

TEST_CASE("failure shapes land in their hand-assigned categories") {
    SUBCASE("entity drift: a literal query replaces the bound variable") {
        llm::ReplayChatClient client;
        load_replay(client);
        auto result = pipeline::run_question(
            "fail-drift",
            "Aside from the Apple Remote, what other device can control the "
            "program Apple Remote was originally designed to interact with?",
            client, make_config());
        CHECK(result.status == "answered");
        REQUIRE(result.predicted_answer.has_value());
        CHECK(*result.predicted_answer == "iPod Touch, iPad");
        // the drifted literal is visible in the trace
        CHECK(find_query(result.trace, interp::TraceKind::ToolRetrieve,
                         "What other devices can control iTunes?") != nullptr);
        CHECK(category_of(result, {"keyboard function keys"}) ==
              "retrieval-missing");
    }

    SUBCASE("sentinel interpolated into a later query as content") {
        llm::ReplayChatClient client;
        load_replay(client);
        auto result = pipeline::run_question(
            "fail-sentinel",
            "According to the 2001 census, what was the population of the "
            "city in which Kirton End is located?",
            client, make_config());
        CHECK(result.status == "answered");
        REQUIRE(result.predicted_answer.has_value());
        CHECK(*result.predicted_answer == "12,790");
        // the failed hop ran at k=10 already, so no boost fired
        CHECK(result.call_stats.adaptive_boosts_used == 0);
        CHECK(find_query(result.trace, interp::TraceKind::ToolRetrieve,
                         "Population of unknown in the 2001 census") != nullptr);
        CHECK(category_of(result, {"35,124"}) ==
              "intermediate-error-propagation");
    }

    SUBCASE("aggregation contradicts correct intermediate variables") {
        llm::ReplayChatClient client;
        load_replay(client);
        auto result = pipeline::run_question(
            "fail-aggregation",
            "Which writer was from England, Henry Roth or Robert Erskine "
            "Childers?",
            client, make_config());
        REQUIRE(result.predicted_answer.has_value());
        CHECK(*result.predicted_answer == "Neither");
        // both probe variables were resolved correctly
        const auto* henry = find_query(result.trace, interp::TraceKind::ToolAnswer,
                                       "Is Henry Roth from England?");
        const auto* childers =
            find_query(result.trace, interp::TraceKind::ToolAnswer,
                       "Is Robert Erskine Childers from England?");
        REQUIRE(henry != nullptr);
        REQUIRE(childers != nullptr);
        CHECK(henry->output == "no");
        CHECK(childers->output == "yes");
        eval::FailureCategory category;
        CHECK(category_of(result, {"Robert Erskine Childers"}, &category) ==
              "retrieval-missing");
        // residual bucket: the gold entity was present in the retrieved docs
        CHECK(category.low_confidence);
    }

    SUBCASE("conjunction flipped by the answer agent despite correct flags") {
        llm::ReplayChatClient client;
        load_replay(client);
        auto result = pipeline::run_question(
            "fail-conjunction",
            "Are Northwestern University and Middlebury College both private "
            "schools?",
            client, make_config());
        REQUIRE(result.predicted_answer.has_value());
        CHECK(*result.predicted_answer == "No");
        const auto* nw = find_query(result.trace, interp::TraceKind::ToolAnswer,
                                    "Is Northwestern University a private school?");
        const auto* mc = find_query(result.trace, interp::TraceKind::ToolAnswer,
                                    "Is Middlebury College a private school?");
        REQUIRE(nw != nullptr);
        REQUIRE(mc != nullptr);
        CHECK(nw->output == "yes");
        CHECK(mc->output == "yes");
        eval::FailureCategory category;
        CHECK(category_of(result, {"yes"}, &category) == "retrieval-missing");
        CHECK_FALSE(category.low_confidence);
    }

    SUBCASE("iterating a string character-by-character exhausts the budget") {
        llm::ReplayChatClient client;
        load_replay(client);
        client.set_fallback([](const std::string& fp) -> std::optional<std::string> {
            if (fp.rfind("answer-evidence|When is the birthdate of ", 0) == 0)
                return "<thinking>The documents do not say.</thinking>\n"
                       "<answer> unknown </answer>";
            return std::nullopt;
        });
        auto result = pipeline::run_question(
            "fail-type-confusion",
            "Which of Aaron Goodwin's clients was born on May 31, 1984?",
            client, make_config(/*max_repair_rounds=*/0));
        CHECK(result.status == "program-error");
        REQUIRE(result.error.has_value());
        CHECK(result.error->kind == interp::ErrorKind::BudgetExceeded);
        // the trace shows the fan-out of single-character queries
        int single_char_queries = 0;
        const std::string prefix = "When is the birthdate of ";
        for (const auto& e : result.trace.entries) {
            if (e.kind != interp::TraceKind::ToolRetrieve || e.inputs.empty())
                continue;
            const std::string& q = e.inputs[0];
            if (q.rfind(prefix, 0) == 0 && q.size() == prefix.size() + 2)
                single_char_queries++;
        }
        CHECK(single_char_queries >= 20);
        CHECK(category_of(result, {"Nate Robinson"}) ==
              "program-error:BudgetExceeded");
    }
}
