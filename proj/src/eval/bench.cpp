#include "ragexec/eval/bench.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "ragexec/eval/failure.hpp"
#include "ragexec/eval/metrics.hpp"

namespace ragexec::eval {

std::vector<DatasetRecord> load_dataset(const std::string& path,
                                        std::vector<SkippedLine>& skipped) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    std::vector<DatasetRecord> records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            skipped.push_back({lineno, "not a JSON object"});
            continue;
        }
        if (!j.contains("id") || !j.contains("question") ||
            !j.contains("golden_answers") || !j["id"].is_string() ||
            !j["question"].is_string() || !j["golden_answers"].is_array() ||
            j["golden_answers"].empty()) {
            skipped.push_back({lineno, "missing id/question/golden_answers"});
            continue;
        }
        DatasetRecord r;
        r.id = j["id"].get<std::string>();
        r.question = j["question"].get<std::string>();
        bool ok = true;
        for (const auto& g : j["golden_answers"]) {
            if (!g.is_string()) {
                ok = false;
                break;
            }
            r.golden_answers.push_back(g.get<std::string>());
        }
        if (!ok) {
            skipped.push_back({lineno, "golden_answers contains a non-string"});
            continue;
        }
        records.push_back(std::move(r));
    }
    return records;
}

BenchmarkReport run_benchmark(const std::string& dataset_path,
                              llm::ChatClient& client,
                              const pipeline::PipelineConfig& config,
                              const std::string& output_dir, int workers) {
    BenchmarkReport report;
    auto records = load_dataset(dataset_path, report.skipped);

    std::filesystem::create_directories(output_dir);
    std::filesystem::create_directories(output_dir + "/traces");

    std::vector<pipeline::QuestionResult> results(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= records.size()) break;
            results[i] =
                pipeline::run_question(records[i].id, records[i].question, client,
                                       config);
        }
    };
    int n_workers = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < n_workers; w++) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    report.total = static_cast<int>(records.size());
    std::string results_path = output_dir + "/results.jsonl";
    std::ofstream out(results_path);
    if (!out) throw std::runtime_error("cannot write " + results_path);

    double em_sum = 0, f1_sum = 0, reward_sum = 0, chat_sum = 0;
    int repaired = 0, boosted = 0;
    for (std::size_t i = 0; i < records.size(); i++) {
        const auto& rec = records[i];
        const auto& res = results[i];
        std::string predicted = res.predicted_answer.value_or("");
        int em = exact_match(predicted, rec.golden_answers);
        double f1 = token_f1(predicted, rec.golden_answers);
        double rw = reward(predicted, rec.golden_answers);
        FailureCategory category =
            categorize_failure(res, rec.golden_answers, config.sentinel);
        em_sum += em;
        f1_sum += f1;
        reward_sum += rw;
        chat_sum += res.call_stats.chat_calls;
        if (res.call_stats.repair_rounds_used > 0) repaired++;
        if (res.call_stats.adaptive_boosts_used > 0) boosted++;
        if (em == 0) report.failure_histogram[to_string(category)]++;

        nlohmann::ordered_json j;
        j["id"] = rec.id;
        j["predicted"] = predicted;
        j["status"] = res.status;
        j["em"] = em;
        j["f1"] = f1;
        j["reward"] = rw;
        j["category"] = to_string(category);
        j["chat_calls"] = res.call_stats.chat_calls;
        j["retrieve_calls"] = res.call_stats.retrieve_calls;
        j["answer_calls"] = res.call_stats.answer_calls;
        j["repair_rounds_used"] = res.call_stats.repair_rounds_used;
        j["adaptive_boosts_used"] = res.call_stats.adaptive_boosts_used;
        out << j.dump() << "\n";

        std::ofstream trace_out(output_dir + "/traces/" + rec.id + ".jsonl");
        trace_out << res.trace.to_jsonl();
    }

    if (report.total > 0) {
        report.em = 100.0 * em_sum / report.total;
        report.f1 = 100.0 * f1_sum / report.total;
        report.reward = reward_sum / report.total;
        report.avg_chat_calls = chat_sum / report.total;
        report.repair_rate = static_cast<double>(repaired) / report.total;
        report.boost_rate = static_cast<double>(boosted) / report.total;
    }
    report.results_path = results_path;

    std::ofstream report_out(output_dir + "/report.json");
    report_out << report_to_json(report) << "\n";
    return report;
}

std::string report_to_json(const BenchmarkReport& report) {
    nlohmann::ordered_json j;
    j["total"] = report.total;
    j["em"] = report.em;
    j["f1"] = report.f1;
    j["reward"] = report.reward;
    j["avg_chat_calls"] = report.avg_chat_calls;
    j["repair_rate"] = report.repair_rate;
    j["boost_rate"] = report.boost_rate;
    j["failure_histogram"] = report.failure_histogram;
    auto& skipped = j["skipped_lines"] = nlohmann::ordered_json::array();
    for (const auto& s : report.skipped)
        skipped.push_back({{"line", s.line}, {"reason", s.reason}});
    return j.dump(2);
}

} // namespace ragexec::eval
