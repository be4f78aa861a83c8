#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ragexec/dsl/lint.hpp"
#include "ragexec/dsl/parser.hpp"
#include "ragexec/eval/bench.hpp"
#include "ragexec/eval/metrics.hpp"
#include "ragexec/llm/chat.hpp"
#include "ragexec/pipeline/pipeline.hpp"
#include "ragexec/retrieval/bm25.hpp"
#include "ragexec/retrieval/remote.hpp"

namespace {

using namespace ragexec;

struct Options {
    std::string config_path;
    std::string replay_path;
    std::optional<int> k0, k1, max_repairs, workers;
    std::string out;
};

struct ResolvedConfig {
    pipeline::PipelineConfig pipeline;
    std::string chat_endpoint;
    std::string retrieval_backend = "local"; // local | remote
    std::string retrieval_endpoint;
    std::string corpus_path;
    std::string out_dir = "out";
    int workers = 1;
};

// precedence: flag > file > default
ResolvedConfig resolve_config(const Options& opts) {
    ResolvedConfig cfg;
    nlohmann::json j = nlohmann::json::object();
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw std::runtime_error("cannot open config: " + opts.config_path);
        in >> j;
    }
    auto get = [&](const char* section, const char* key) -> nlohmann::json {
        if (j.contains(section) && j[section].contains(key)) return j[section][key];
        return {};
    };

    if (auto v = get("endpoints", "chat"); v.is_string())
        cfg.chat_endpoint = v.get<std::string>();
    if (auto v = get("endpoints", "retrieval"); v.is_string())
        cfg.retrieval_endpoint = v.get<std::string>();
    if (auto v = get("retrieval", "backend"); v.is_string())
        cfg.retrieval_backend = v.get<std::string>();
    if (auto v = get("retrieval", "corpus"); v.is_string())
        cfg.corpus_path = v.get<std::string>();
    if (auto v = get("retrieval", "k0"); v.is_number_integer())
        cfg.pipeline.budget.default_k = v.get<int>();
    if (auto v = get("retrieval", "k1"); v.is_number_integer())
        cfg.pipeline.budget.boosted_k = v.get<int>();
    if (auto v = get("pipeline", "max_repair_rounds"); v.is_number_integer())
        cfg.pipeline.max_repair_rounds = v.get<int>();
    if (auto v = get("pipeline", "max_tool_calls"); v.is_number_integer())
        cfg.pipeline.limits.max_tool_calls = v.get<int>();
    if (auto v = get("pipeline", "max_statements"); v.is_number_integer())
        cfg.pipeline.limits.max_statements = v.get<int>();
    if (auto v = get("pipeline", "merge_decompose_plan"); v.is_boolean())
        cfg.pipeline.merge_decompose_plan = v.get<bool>();
    if (j.contains("sentinels") && j["sentinels"].is_array()) {
        cfg.pipeline.sentinel.phrases.clear();
        for (const auto& s : j["sentinels"])
            cfg.pipeline.sentinel.phrases.push_back(s.get<std::string>());
    }
    if (auto v = get("eval", "workers"); v.is_number_integer())
        cfg.workers = v.get<int>();
    if (auto v = get("eval", "out"); v.is_string())
        cfg.out_dir = v.get<std::string>();
    if (j.contains("models") && j["models"].is_object()) {
        auto& m = j["models"];
        if (m.contains("decompose"))
            cfg.pipeline.agent_config.decompose_params.model =
                m["decompose"].get<std::string>();
        if (m.contains("plan"))
            cfg.pipeline.agent_config.plan_params.model = m["plan"].get<std::string>();
        if (m.contains("answer"))
            cfg.pipeline.agent_config.answer_params.model =
                m["answer"].get<std::string>();
    }

    if (opts.k0) cfg.pipeline.budget.default_k = *opts.k0;
    if (opts.k1) cfg.pipeline.budget.boosted_k = *opts.k1;
    if (opts.max_repairs) cfg.pipeline.max_repair_rounds = *opts.max_repairs;
    if (opts.workers) cfg.workers = *opts.workers;
    if (!opts.out.empty()) cfg.out_dir = opts.out;

    if (cfg.pipeline.budget.boosted_k <= cfg.pipeline.budget.default_k)
        throw std::runtime_error("k1 must be greater than k0");
    return cfg;
}

std::shared_ptr<retrieval::LexicalIndex> g_index;

void wire_retrieval(ResolvedConfig& cfg) {
    if (cfg.retrieval_backend == "remote") {
        std::string endpoint = cfg.retrieval_endpoint;
        if (endpoint.empty())
            throw std::runtime_error("remote retrieval backend needs endpoints.retrieval");
        cfg.pipeline.retrieve = [endpoint](const std::string& q, int k) {
            return retrieval::remote_search(endpoint, q, k);
        };
        return;
    }
    if (cfg.corpus_path.empty())
        throw std::runtime_error("local retrieval backend needs retrieval.corpus");
    g_index = std::make_shared<retrieval::LexicalIndex>(
        retrieval::LexicalIndex::build_from_file(cfg.corpus_path));
    auto index = g_index;
    cfg.pipeline.retrieve = [index](const std::string& q, int k) {
        return index->search(q, k);
    };
}

std::unique_ptr<llm::ChatClient> make_client(const Options& opts,
                                             const ResolvedConfig& cfg) {
    if (!opts.replay_path.empty()) {
        auto client = std::make_unique<llm::ReplayChatClient>();
        client->load_file(opts.replay_path);
        return client;
    }
    if (cfg.chat_endpoint.empty())
        throw std::runtime_error("no chat endpoint configured (and no --replay)");
    const char* key = std::getenv("RAGEXEC_API_KEY");
    return std::make_unique<llm::HttpChatClient>(cfg.chat_endpoint,
                                                 key ? key : "");
}

std::string truncate(const std::string& s, std::size_t n = 120) {
    if (s.size() <= n) return s;
    return s.substr(0, n) + "...";
}

std::string join_inputs(const std::vector<std::string>& inputs) {
    std::string out;
    for (std::size_t i = 0; i < inputs.size(); i++) {
        if (i) out += " | ";
        out += inputs[i];
    }
    return out;
}

void print_trace_table(const interp::ExecutionTrace& trace, bool errors_only) {
    std::cout << std::left << std::setw(5) << "step" << std::setw(20) << "kind"
              << std::setw(5) << "rnd" << std::setw(6) << "k"
              << "detail\n";
    for (const auto& e : trace.entries) {
        if (errors_only && e.kind != interp::TraceKind::Error) continue;
        std::string detail = truncate(join_inputs(e.inputs));
        if (!e.output.empty()) {
            if (!detail.empty()) detail += " -> ";
            detail += truncate(e.output);
        }
        std::cout << std::left << std::setw(5) << e.step << std::setw(20)
                  << to_string(e.kind) << std::setw(5) << e.repair_round
                  << std::setw(6) << (e.k ? std::to_string(*e.k) : "-") << detail
                  << "\n";
    }
}

int cmd_index(const std::string& corpus, const std::string& out_path) {
    auto index = retrieval::LexicalIndex::build_from_file(corpus);
    index.save(out_path);
    std::cout << "indexed " << index.size() << " docs (avg length "
              << std::fixed << std::setprecision(1) << index.average_doc_length()
              << " tokens) -> " << out_path << "\n";
    return 0;
}

int cmd_ask(const std::string& question, const Options& opts, bool show_trace) {
    ResolvedConfig cfg = resolve_config(opts);
    wire_retrieval(cfg);
    auto client = make_client(opts, cfg);
    auto result = pipeline::run_question("cli", question, *client, cfg.pipeline);

    std::filesystem::create_directories(cfg.out_dir);
    std::string trace_path = cfg.out_dir + "/trace.jsonl";
    std::ofstream(trace_path) << result.trace.to_jsonl();

    if (show_trace) print_trace_table(result.trace, false);
    if (result.predicted_answer) {
        std::cout << *result.predicted_answer << "\n";
    } else {
        std::cerr << "no answer (" << result.status << ")";
        if (result.error) std::cerr << ": " << result.error->message;
        std::cerr << "\n";
    }
    std::cerr << "status=" << result.status << " trace=" << trace_path << "\n";
    if (result.status == "program-error" || result.status == "plan-failure")
        return 2;
    if (result.status == "tool-failure") return 1;
    return 0;
}

int cmd_eval(const std::string& dataset, const Options& opts) {
    ResolvedConfig cfg = resolve_config(opts);
    wire_retrieval(cfg);
    auto client = make_client(opts, cfg);
    auto report =
        eval::run_benchmark(dataset, *client, cfg.pipeline, cfg.out_dir, cfg.workers);

    std::cout << std::fixed << std::setprecision(2);
    std::cout << "questions        " << report.total << "\n"
              << "em               " << report.em << "\n"
              << "f1               " << report.f1 << "\n"
              << "reward           " << std::setprecision(4) << report.reward << "\n"
              << std::setprecision(2) << "avg_chat_calls   " << report.avg_chat_calls
              << "\n"
              << "repair_rate      " << report.repair_rate << "\n"
              << "boost_rate       " << report.boost_rate << "\n";
    for (const auto& [category, count] : report.failure_histogram)
        std::cout << "  " << category << ": " << count << "\n";
    if (!report.skipped.empty()) {
        std::cout << "skipped " << report.skipped.size() << " malformed line(s):";
        for (const auto& s : report.skipped) std::cout << " " << s.line;
        std::cout << "\n";
    }
    std::cout << "results: " << report.results_path << "\n";
    return 0;
}

int cmd_trace(const std::string& path, std::optional<int> step, bool errors_only) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open trace: " << path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto trace = interp::ExecutionTrace::from_jsonl(buf.str());
    if (step) {
        if (*step < 0 || *step >= static_cast<int>(trace.entries.size())) {
            std::cerr << "step " << *step << " out of range (trace has "
                      << trace.entries.size() << " entries)\n";
            return 1;
        }
        const auto& e = trace.entries[*step];
        nlohmann::ordered_json j;
        j["step"] = e.step;
        j["source"] = e.source;
        j["line"] = e.span.line;
        j["kind"] = to_string(e.kind);
        j["inputs"] = e.inputs;
        j["output"] = e.output;
        if (e.k) j["k"] = *e.k;
        else j["k"] = nullptr;
        j["ms"] = e.ms;
        j["repair_round"] = e.repair_round;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    print_trace_table(trace, errors_only);
    return 0;
}

int cmd_parse(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open program: " << path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto parsed = dsl::parse_program(buf.str());
    if (auto* diag = std::get_if<dsl::SyntaxDiagnostic>(&parsed)) {
        std::cerr << (diag->unsupported ? "unsupported construct" : "syntax error")
                  << " at line " << diag->span.line << ", column " << diag->span.column
                  << ": " << diag->message << "\n";
        if (!diag->offending_fragment.empty())
            std::cerr << "  near: " << diag->offending_fragment << "\n";
        return 2;
    }
    auto& program = std::get<dsl::PlanProgram>(parsed);
    std::cout << dsl::render_program(program);
    for (const auto& w : dsl::lint_program(program))
        std::cerr << "warning [" << w.code << "] line " << w.span.line << ": "
                  << w.message << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifiable program-execution runtime for multi-hop retrieval QA"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--config", opts.config_path, "JSON config file");
    app.add_option("--replay", opts.replay_path, "scripted chat replay file (JSONL)");
    int k0_flag = -1, k1_flag = -1, repairs_flag = -1, workers_flag = -1;
    app.add_option("--k0", k0_flag, "default retrieval k");
    app.add_option("--k1", k1_flag, "boosted retrieval k");
    app.add_option("--max-repairs", repairs_flag, "max self-repair rounds T");
    app.add_option("--workers", workers_flag, "eval worker count");
    app.add_option("--out", opts.out, "output directory");

    std::string corpus, index_out = "index.json", question, dataset, trace_path,
                program_path;
    bool show_trace = false, errors_only = false;
    int step_flag = -1;

    auto* index_cmd = app.add_subcommand("index", "build a lexical index");
    index_cmd->add_option("corpus", corpus, "corpus JSONL")->required();
    index_cmd->add_option("--out-index", index_out, "index output path");

    auto* ask_cmd = app.add_subcommand("ask", "answer one question");
    ask_cmd->add_option("question", question, "the question")->required();
    ask_cmd->add_flag("--show-trace", show_trace, "print the execution trace");

    auto* eval_cmd = app.add_subcommand("eval", "run a benchmark dataset");
    eval_cmd->add_option("dataset", dataset, "dataset JSONL")->required();

    auto* trace_cmd = app.add_subcommand("trace", "inspect a trace file");
    trace_cmd->add_option("trace", trace_path, "trace JSONL")->required();
    trace_cmd->add_option("--step", step_flag, "dump one entry in full");
    trace_cmd->add_flag("--errors-only", errors_only, "show only error entries");

    auto* parse_cmd = app.add_subcommand("parse", "parse and lint a plan program");
    parse_cmd->add_option("program", program_path, "program file")->required();

    CLI11_PARSE(app, argc, argv);

    if (k0_flag >= 0) opts.k0 = k0_flag;
    if (k1_flag >= 0) opts.k1 = k1_flag;
    if (repairs_flag >= 0) opts.max_repairs = repairs_flag;
    if (workers_flag >= 0) opts.workers = workers_flag;

    try {
        if (index_cmd->parsed()) return cmd_index(corpus, index_out);
        if (ask_cmd->parsed()) return cmd_ask(question, opts, show_trace);
        if (eval_cmd->parsed()) return cmd_eval(dataset, opts);
        if (trace_cmd->parsed())
            return cmd_trace(trace_path,
                             step_flag >= 0 ? std::optional<int>(step_flag)
                                            : std::nullopt,
                             errors_only);
        if (parse_cmd->parsed()) return cmd_parse(program_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
