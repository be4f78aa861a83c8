#pragma once

#include <map>
#include <string>
#include <vector>

#include "ragexec/pipeline/pipeline.hpp"

namespace ragexec::eval {

struct DatasetRecord {
    std::string id;
    std::string question;
    std::vector<std::string> golden_answers;
};

struct SkippedLine {
    int line = 0;
    std::string reason;
};

// fields id/question/golden_answers; malformed lines are collected, not fatal
std::vector<DatasetRecord> load_dataset(const std::string& path,
                                        std::vector<SkippedLine>& skipped);

struct BenchmarkReport {
    int total = 0;
    double em = 0.0;     // percent
    double f1 = 0.0;     // percent
    double reward = 0.0; // mean, [0,1]
    double avg_chat_calls = 0.0;
    double repair_rate = 0.0; // fraction of questions with >= 1 repair round
    double boost_rate = 0.0;  // fraction of questions with >= 1 adaptive boost
    std::map<std::string, int> failure_histogram;
    std::vector<SkippedLine> skipped;
    std::string results_path;
};

// Runs run_question over every record with `workers` threads, writes
// results.jsonl, per-question traces, and report.json under output_dir, and
// returns the aggregates. Aggregates are pure functions of results.jsonl.
BenchmarkReport run_benchmark(const std::string& dataset_path,
                              llm::ChatClient& client,
                              const pipeline::PipelineConfig& config,
                              const std::string& output_dir, int workers = 1);

std::string report_to_json(const BenchmarkReport& report);

} // namespace ragexec::eval
