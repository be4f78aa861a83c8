#pragma once

#include <string>
#include <vector>

#include "ragexec/pipeline/pipeline.hpp"

namespace ragexec::eval {

struct FailureCategory {
    enum class Kind {
        NotAFailure,
        RetrievalMissing,
        IntermediateErrorPropagation,
        FinalRefusal,
        ProgramError,
    } kind = Kind::NotAFailure;
    std::string program_error_kind; // set for ProgramError ("NameError", ...,
                                    // or "UnknownError")
    bool low_confidence = false;    // residual RetrievalMissing bucket
};

std::string to_string(const FailureCategory& category);

FailureCategory categorize_failure(const pipeline::QuestionResult& result,
                                   const std::vector<std::string>& golds,
                                   const tools::SentinelPolicy& policy = {});

} // namespace ragexec::eval
