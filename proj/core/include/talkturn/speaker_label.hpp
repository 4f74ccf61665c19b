#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace talkturn {

/// A speaker label as it appears in labelled text: canonical "[S1]".."[S5]",
/// an out-of-vocabulary bracket token such as "[Judith]", or no label at all.
class SpeakerLabel {
public:
    enum class Kind { canonical, oov, unlabeled };

    static constexpr int max_canonical = 5;

    SpeakerLabel() : kind_(Kind::unlabeled), index_(0) {}

    /// Canonical label [S1]..[S5]; throws ValidationError outside [1,5].
    static SpeakerLabel canonical(int index);

    /// Out-of-vocabulary label. The name must be non-empty, contain no
    /// whitespace or brackets, and must not shadow a canonical label
    /// ("S1".."S5" are reserved so render/parse stays bijective).
    static SpeakerLabel oov(std::string name);

    static SpeakerLabel unlabeled() { return SpeakerLabel(); }

    /// Parses a whole bracket token ("[S1]", "[Judith]"). Returns nullopt when
    /// the token is not a label per the label grammar: "[" + body + "]" with a
    /// body free of whitespace and brackets.
    static std::optional<SpeakerLabel> from_token(std::string_view token);

    /// Builds a label from a bare key as used in RTTM / utterance records:
    /// "S1".."S5" map to canonical labels, anything else to OOV.
    static SpeakerLabel from_key(std::string_view key);

    Kind kind() const { return kind_; }
    bool is_canonical() const { return kind_ == Kind::canonical; }
    bool is_oov() const { return kind_ == Kind::oov; }
    bool is_unlabeled() const { return kind_ == Kind::unlabeled; }

    /// Canonical index in [1,5]; only valid for canonical labels.
    int index() const { return index_; }
    const std::string& name() const { return name_; }

    /// Bracketed form: "[S1]", "[Judith]". Unlabeled renders as "".
    std::string render() const;

    /// Bare key: "S1", "Judith". Unlabeled yields "".
    std::string key() const;

    friend bool operator==(const SpeakerLabel& a, const SpeakerLabel& b) {
        return a.kind_ == b.kind_ && a.index_ == b.index_ && a.name_ == b.name_;
    }
    friend bool operator!=(const SpeakerLabel& a, const SpeakerLabel& b) { return !(a == b); }
    friend bool operator<(const SpeakerLabel& a, const SpeakerLabel& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        if (a.index_ != b.index_) return a.index_ < b.index_;
        return a.name_ < b.name_;
    }

private:
    Kind kind_;
    int index_;        // canonical only
    std::string name_; // oov only
};

} // namespace talkturn
