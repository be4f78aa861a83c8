#pragma once

#include <chrono>
#include <string>

#include "ragexec/retrieval/doc.hpp"

namespace ragexec::retrieval {

// POSTs {"query","topk"} to the endpoint and maps {"results":[...]} into a
// DocumentSet. Throws interp::ToolError on transport, status, or schema
// problems; the message carries the first 200 bytes of the offending body.
DocumentSet remote_search(const std::string& endpoint_url, const std::string& query,
                          int k,
                          std::chrono::milliseconds timeout = std::chrono::seconds(30));

} // namespace ragexec::retrieval
