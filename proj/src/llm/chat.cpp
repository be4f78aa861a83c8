#include "ragexec/llm/chat.hpp"

#include <fstream>

#include <json.hpp>
#include <httplib.h>

#include "ragexec/interp/interpreter.hpp"

namespace ragexec::llm {

std::string replay_fingerprint(const CallContext& ctx) {
    // first 64 bytes of the salient input, backed off to a UTF-8 boundary
    std::string head = ctx.salient;
    if (head.size() > 64) {
        std::size_t n = 64;
        while (n > 0 && (static_cast<unsigned char>(head[n]) & 0xC0) == 0x80) n--;
        head = head.substr(0, n);
    }
    return ctx.template_id + "|" + head;
}

namespace {

std::pair<std::string, std::string> split_url(const std::string& url) {
    std::size_t scheme = url.find("://");
    std::size_t path_at = scheme == std::string::npos
                              ? url.find('/')
                              : url.find('/', scheme + 3);
    if (path_at == std::string::npos) return {url, "/"};
    return {url.substr(0, path_at), url.substr(path_at)};
}

} // namespace

std::string HttpChatClient::chat(const std::vector<ChatMessage>& messages,
                                 const GenerationParams& params, const CallContext&) {
    if (messages.empty() || messages.front().role != "system")
        throw interp::ToolError("chat: messages must start with a system message");

    auto [base, path] = split_url(endpoint_);
    httplib::Client client(base);
    auto timeout = std::chrono::duration_cast<std::chrono::seconds>(params.timeout);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    if (!api_key_.empty()) client.set_bearer_token_auth(api_key_);

    nlohmann::json payload;
    payload["model"] = params.model;
    auto& msgs = payload["messages"] = nlohmann::json::array();
    for (const auto& m : messages)
        msgs.push_back({{"role", m.role}, {"content", m.content}});
    payload["temperature"] = params.temperature;
    payload["max_tokens"] = params.max_tokens;

    auto res = client.Post(path, payload.dump(), "application/json");
    if (!res)
        throw interp::ToolError("chat endpoint unreachable: " + endpoint_ + " (" +
                                httplib::to_string(res.error()) + ")");
    if (res->status < 200 || res->status >= 300)
        throw interp::ToolError("chat endpoint returned status " +
                                std::to_string(res->status) + ": " +
                                res->body.substr(0, 200));

    nlohmann::json j = nlohmann::json::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.contains("choices") || !j["choices"].is_array() ||
        j["choices"].empty() || !j["choices"][0].contains("message") ||
        !j["choices"][0]["message"].contains("content") ||
        !j["choices"][0]["message"]["content"].is_string())
        throw interp::ToolError("chat endpoint returned unexpected body: " +
                                res->body.substr(0, 200));
    return j["choices"][0]["message"]["content"].get<std::string>();
}

void ReplayChatClient::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open replay script: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("fingerprint") || !j.contains("response") ||
            !j["fingerprint"].is_string() || !j["response"].is_string())
            throw std::runtime_error("malformed replay script line " +
                                     std::to_string(lineno) + " in " + path);
        add(j["fingerprint"].get<std::string>(), j["response"].get<std::string>());
    }
}

void ReplayChatClient::add(const std::string& fingerprint, std::string response) {
    scripts_[fingerprint].push_back(std::move(response));
}

std::string ReplayChatClient::chat(const std::vector<ChatMessage>& messages,
                                   const GenerationParams&, const CallContext& ctx) {
    if (messages.empty() || messages.front().role != "system")
        throw interp::ToolError("chat: messages must start with a system message");
    std::string fp = replay_fingerprint(ctx);
    std::lock_guard lock(mutex_);
    auto it = scripts_.find(fp);
    if (it != scripts_.end()) {
        std::size_t& at = cursor_[fp];
        if (at < it->second.size()) return it->second[at++];
    }
    if (fallback_) {
        if (auto r = fallback_(fp)) return *r;
    }
    throw interp::ToolError("replay miss: no scripted response for fingerprint '" + fp +
                            "'");
}

} // namespace ragexec::llm
