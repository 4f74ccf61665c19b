#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace talkturn {

/// Token counting and suffix truncation. Handles are immutable after load and
/// safe to share across threads.
class Tokenizer {
public:
    virtual ~Tokenizer() = default;

    virtual std::string id() const = 0;

    virtual int count_tokens(std::string_view text) const = 0;

    /// Returns text covering a suffix of the token sequence of `text`, with
    /// count_tokens(result) <= n.
    virtual std::string truncate_to_last_n_tokens(std::string_view text, int n) const = 0;
};

/// Whitespace-delimited tokens; each speaker label is one token. Deterministic
/// and dependency-free; the default for the harness.
class WhitespaceTokenizer final : public Tokenizer {
public:
    std::string id() const override { return "whitespace"; }
    int count_tokens(std::string_view text) const override;
    std::string truncate_to_last_n_tokens(std::string_view text, int n) const override;
};

/// Byte-level BPE over a user-supplied merges file (one "left right" pair per
/// line, rank by position; an optional leading version header is skipped).
/// Pre-tokenization folds a single leading space into each word, so token
/// counts are additive across whitespace-joined words. Opt-in parity with the
/// inference model's tokenizer.
class BpeTokenizer final : public Tokenizer {
public:
    static BpeTokenizer from_files(const std::filesystem::path& merges_path);

    std::string id() const override { return "bpe"; }
    int count_tokens(std::string_view text) const override;
    std::string truncate_to_last_n_tokens(std::string_view text, int n) const override;

    /// Token strings in the byte-to-unicode alphabet (spaces appear as U+0120).
    std::vector<std::string> encode(std::string_view text) const;
    std::string decode(const std::vector<std::string>& tokens) const;

private:
    BpeTokenizer() = default;
    std::vector<std::string> encode_piece(const std::string& piece) const;

    std::map<std::pair<std::string, std::string>, int> merge_ranks_;
};

struct TokenizerFiles {
    std::optional<std::filesystem::path> bpe_merges;
};

/// Builds a tokenizer by id: "whitespace" or "bpe" (requires a merges file).
/// Unknown ids throw ValidationError.
std::shared_ptr<const Tokenizer> make_tokenizer(const std::string& tokenizer_id,
                                                const TokenizerFiles& files = {});

} // namespace talkturn
