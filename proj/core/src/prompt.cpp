#include "talkturn/prompt.hpp"

#include "talkturn/errors.hpp"
#include "talkturn/speaker_label.hpp"
#include "talkturn/strings.hpp"

namespace talkturn {

void PromptConfig::validate(const Tokenizer& tokenizer) const {
    if (max_speakers < 1 || max_speakers > SpeakerLabel::max_canonical) {
        throw ValidationError("max_speakers must be in [1," +
                              std::to_string(SpeakerLabel::max_canonical) + "]");
    }
    const int task_tokens = tokenizer.count_tokens(make_task_prompt(*this));
    if (prompt_budget < task_tokens + 1) {
        throw ValidationError("prompt_budget " + std::to_string(prompt_budget) +
                              " cannot hold the task prompt (" + std::to_string(task_tokens) +
                              " tokens) plus one token");
    }
    if (label_budget < 1) throw ValidationError("label_budget must be >= 1");
}

std::string render_label(const std::string& label_format, int n) {
    std::string out = label_format;
    const std::string placeholder = "{n}";
    size_t pos = out.find(placeholder);
    if (pos == std::string::npos) {
        throw ValidationError("label_format must contain \"{n}\": \"" + label_format + "\"");
    }
    out.replace(pos, placeholder.size(), std::to_string(n));
    return out;
}

std::string make_task_prompt(const PromptConfig& config) {
    std::string out;
    for (int n = 1; n <= config.max_speakers; ++n) {
        if (!out.empty()) out += ' ';
        out += render_label(config.label_format, n);
    }
    return out;
}

namespace {

bool is_label_token(std::string_view token) {
    return SpeakerLabel::from_token(token).has_value();
}

} // namespace

std::string truncate_context_left(std::string_view context, int budget,
                                  const Tokenizer& tokenizer, const TruncateOptions& options,
                                  TruncateStats* stats) {
    if (budget <= 0) return "";
    if (tokenizer.count_tokens(context) <= budget) return collapse_whitespace(context);
    if (options.raw) return tokenizer.truncate_to_last_n_tokens(context, budget);

    // The label rule works at word granularity: a word-suffix is also a
    // token-suffix under both built-in tokenizers.
    auto words = split_whitespace(context);
    const size_t n = words.size();

    auto suffix_string = [&](size_t count) {
        std::string out;
        for (size_t i = n - count; i < n; ++i) {
            if (!out.empty()) out += ' ';
            out += words[i];
        }
        return out;
    };
    auto fits = [&](const std::string& s) { return tokenizer.count_tokens(s) <= budget; };

    // Largest word-suffix within budget.
    size_t keep = 0;
    std::string kept;
    for (size_t count = n; count > 0; --count) {
        std::string candidate = suffix_string(count);
        if (fits(candidate)) {
            keep = count;
            kept = std::move(candidate);
            break;
        }
    }
    if (keep == 0) {
        if (stats) ++stats->budget_too_small;
        return "";
    }
    if (is_label_token(words[n - keep])) return kept;

    // Cut landed inside a turn: prepend the governing label, shrinking the
    // text suffix to stay within budget.
    std::string governing;
    for (size_t i = n - keep; i-- > 0;) {
        if (is_label_token(words[i])) {
            governing = words[i];
            break;
        }
    }
    if (governing.empty()) return kept; // no label anywhere before the cut

    for (size_t count = keep; count-- > 0;) {
        std::string candidate =
            count == 0 ? governing : governing + " " + suffix_string(count);
        if (fits(candidate)) {
            if (count == 0) {
                // Label alone: budget cannot hold a label plus one token.
                if (stats) ++stats->budget_too_small;
                return "";
            }
            return candidate;
        }
    }
    if (stats) ++stats->budget_too_small;
    return "";
}

std::string compose_prompt(std::string_view task, const std::optional<std::string>& context,
                           const PromptConfig& config, const Tokenizer& tokenizer) {
    std::string task_str = collapse_whitespace(task);
    if (!context || trim(*context).empty()) return task_str;

    const int task_tokens = tokenizer.count_tokens(task_str);
    int context_budget = config.include_task_in_budget
                             ? config.prompt_budget - task_tokens - 1
                             : config.prompt_budget;
    if (context_budget <= 0) return task_str;

    TruncateOptions trunc{config.raw_truncation};
    while (context_budget > 0) {
        std::string truncated = truncate_context_left(*context, context_budget, tokenizer, trunc);
        if (truncated.empty()) return task_str;
        std::string composed = task_str.empty() ? truncated : task_str + " " + truncated;
        if (!config.include_task_in_budget ||
            tokenizer.count_tokens(composed) <= config.prompt_budget) {
            return composed;
        }
        --context_budget; // joint tokenization exceeded the budget; tighten
    }
    return task_str;
}

} // namespace talkturn
