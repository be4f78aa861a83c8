#pragma once

#include <string>
#include <vector>

namespace ragexec::llm {

// template-ids: decompose-system, decompose-user, plan-system, plan-user,
// plan-syntax-repair, plan-runtime-repair, answer-evidence, answer-aggregation
const std::vector<std::string>& template_ids();
const std::string& prompt_template(const std::string& template_id);

// The worked one-shot program referenced by the plan-user {CODE_EXAMPLE} slot.
const std::string& plan_code_example();

// Substitutes declared placeholders only; literal braces elsewhere in the
// template body survive untouched. Throws std::runtime_error when a declared
// placeholder is left unfilled or an unknown key is supplied.
std::string render_template(
    const std::string& template_id,
    const std::vector<std::pair<std::string, std::string>>& values);

} // namespace ragexec::llm
