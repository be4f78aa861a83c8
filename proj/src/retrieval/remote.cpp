#include "ragexec/retrieval/remote.hpp"

#include <json.hpp>

#include <httplib.h>

#include "ragexec/interp/interpreter.hpp"

namespace ragexec::retrieval {

namespace {

std::string snippet(const std::string& body) {
    return body.substr(0, 200);
}

// splits http://host:port/path into (base, path)
std::pair<std::string, std::string> split_url(const std::string& url) {
    std::size_t scheme = url.find("://");
    std::size_t path_at = scheme == std::string::npos
                              ? url.find('/')
                              : url.find('/', scheme + 3);
    if (path_at == std::string::npos) return {url, "/"};
    return {url.substr(0, path_at), url.substr(path_at)};
}

} // namespace

DocumentSet remote_search(const std::string& endpoint_url, const std::string& query,
                          int k, std::chrono::milliseconds timeout) {
    auto [base, path] = split_url(endpoint_url);
    httplib::Client client(base);
    client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout));
    client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout));

    nlohmann::json payload{{"query", query}, {"topk", k}};
    auto res = client.Post(path, payload.dump(), "application/json");
    if (!res)
        throw interp::ToolError("retrieval endpoint unreachable: " + endpoint_url +
                                " (" + httplib::to_string(res.error()) + ")");
    if (res->status < 200 || res->status >= 300)
        throw interp::ToolError("retrieval endpoint returned status " +
                                std::to_string(res->status) + ": " +
                                snippet(res->body));

    nlohmann::json j = nlohmann::json::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("results") ||
        !j["results"].is_array())
        throw interp::ToolError("retrieval endpoint returned unexpected body: " +
                                snippet(res->body));

    DocumentSet out;
    out.query = query;
    out.k = k;
    for (const auto& r : j["results"]) {
        if (!r.is_object() || !r.contains("id") || !r.contains("title") ||
            !r.contains("text") || !r.contains("score"))
            throw interp::ToolError("retrieval result missing id/title/text/score: " +
                                    snippet(res->body));
        try {
            out.docs.push_back({r["id"].get<std::string>(),
                                r["title"].get<std::string>(),
                                r["text"].get<std::string>(),
                                r["score"].get<double>()});
        } catch (const nlohmann::json::exception&) {
            throw interp::ToolError("retrieval result has wrong field types: " +
                                    snippet(res->body));
        }
    }
    return out;
}

} // namespace ragexec::retrieval
