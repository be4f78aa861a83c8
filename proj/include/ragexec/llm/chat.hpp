#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ragexec::llm {

struct ChatMessage {
    std::string role; // system | user | assistant
    std::string content;
};

struct GenerationParams {
    std::string model = "default";
    double temperature = 0.0;
    int max_tokens = 2048;
    std::chrono::milliseconds timeout{120000};
};

// Identifies a call for replay matching: the template driving it and the
// distinguishing placeholder value (question, failing code, ...).
struct CallContext {
    std::string template_id;
    std::string salient;
};

std::string replay_fingerprint(const CallContext& ctx);

class ChatClient {
public:
    virtual ~ChatClient() = default;
    virtual std::string chat(const std::vector<ChatMessage>& messages,
                             const GenerationParams& params,
                             const CallContext& ctx) = 0;
};

// Speaks the common chat-completions JSON shape:
// POST {"model","messages","temperature","max_tokens"} -> choices[0].message.content
class HttpChatClient : public ChatClient {
public:
    HttpChatClient(std::string endpoint_url, std::string api_key = "")
        : endpoint_(std::move(endpoint_url)), api_key_(std::move(api_key)) {}

    std::string chat(const std::vector<ChatMessage>& messages,
                     const GenerationParams& params, const CallContext& ctx) override;

private:
    std::string endpoint_;
    std::string api_key_;
};

// Deterministic scripted client. Scripts are line-delimited JSON
// {"fingerprint": ..., "response": ...}; entries sharing a fingerprint are
// consumed in file order. A miss raises an error naming the fingerprint
// unless a fallback is installed.
class ReplayChatClient : public ChatClient {
public:
    ReplayChatClient() = default;

    void load_file(const std::string& path);
    void add(const std::string& fingerprint, std::string response);
    void set_fallback(
        std::function<std::optional<std::string>(const std::string&)> fallback) {
        fallback_ = std::move(fallback);
    }

    std::string chat(const std::vector<ChatMessage>& messages,
                     const GenerationParams& params, const CallContext& ctx) override;

private:
    std::map<std::string, std::vector<std::string>> scripts_;
    std::map<std::string, std::size_t> cursor_;
    std::function<std::optional<std::string>(const std::string&)> fallback_;
    std::mutex mutex_;
};

} // namespace ragexec::llm
