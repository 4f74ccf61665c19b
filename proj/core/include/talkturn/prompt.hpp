#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "talkturn/tokenizer.hpp"

namespace talkturn {

struct PromptConfig {
    int max_speakers = 5;
    int prompt_budget = 224; // total prompt, task tokens included
    int label_budget = 224;  // training target budget
    std::string label_format = "[S{n}]";
    std::string tokenizer_id = "whitespace";
    // Set to count only the context against prompt_budget.
    bool include_task_in_budget = true;
    // Paper-literal raw token truncation; may orphan text from its speaker.
    bool raw_truncation = false;

    // Throws ValidationError unless 1 <= max_speakers <= 5 and the budget
    // holds the task prompt plus at least one token.
    void validate(const Tokenizer& tokenizer) const;
};

std::string render_label(const std::string& label_format, int n);

/// The fixed label-vocabulary prefix, e.g. "[S1] [S2] [S3] [S4] [S5]".
std::string make_task_prompt(const PromptConfig& config);

struct TruncateOptions {
    bool raw = false; // skip the label-preservation rule
};

struct TruncateStats {
    int budget_too_small = 0; // budget could not hold a label plus one token
};

/// Keeps a token-suffix of `context` with count <= budget. When the cut lands
/// inside a turn, the governing speaker label is prepended (counted inside the
/// budget) so the result starts with a label.
std::string truncate_context_left(std::string_view context, int budget,
                                  const Tokenizer& tokenizer, const TruncateOptions& options = {},
                                  TruncateStats* stats = nullptr);

/// task + " " + truncated context; without context, the task alone. The total
/// token count never exceeds config.prompt_budget.
std::string compose_prompt(std::string_view task, const std::optional<std::string>& context,
                           const PromptConfig& config, const Tokenizer& tokenizer);

} // namespace talkturn
