#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "talkturn/speaker_label.hpp"

namespace talkturn {

/// A speaker-labelled run of text. Turn text never contains label tokens;
/// parsing is exhaustive.
struct Turn {
    SpeakerLabel label;
    std::string text;

    friend bool operator==(const Turn& a, const Turn& b) {
        return a.label == b.label && a.text == b.text;
    }
};

/// A time-aligned single-speaker span of reference text within an audio file.
struct Utterance {
    std::string audio_id;
    std::string speaker_id; // corpus-native ID
    double start_s = 0.0;
    double end_s = 0.0;
    std::string text;

    friend bool operator==(const Utterance&, const Utterance&) = default;
};

/// Diarization output unit: who spoke when.
struct SpeakerSegment {
    std::string audio_id;
    SpeakerLabel label;
    double start_s = 0.0;
    double end_s = 0.0;

    friend bool operator==(const SpeakerSegment&, const SpeakerSegment&) = default;
};

/// A word with timestamps and an assigned speaker. Zero-width words are legal
/// (degenerate overlap timestamps) and are surfaced by the diagnostics pass.
struct TimedWord {
    std::string word;
    double start_s = 0.0;
    double end_s = 0.0;
    SpeakerLabel label;

    friend bool operator==(const TimedWord&, const TimedWord&) = default;
};

/// Splits labelled text into turns. Total: any string parses. Text before the
/// first label becomes one unlabeled turn.
std::vector<Turn> parse_labeled_text(std::string_view text);

struct RenderOptions {
    bool render_unlabeled = false;
};

/// Inverse of parse_labeled_text (modulo whitespace normalization). Throws
/// ValidationError on an unlabeled turn unless render_unlabeled is set.
std::string render_labeled_text(std::span<const Turn> turns, const RenderOptions& options = {});

struct RelabelResult {
    std::vector<Turn> turns;
    // (old label, new label) in order of first appearance.
    std::vector<std::pair<SpeakerLabel, SpeakerLabel>> mapping;
};

/// Renames speakers so the first-appearing speaker is S1, the second S2, and
/// so on; OOV labels also receive canonical slots. Unlabeled turns pass
/// through. Throws ValidationError with more than 5 distinct speakers.
RelabelResult canonical_relabel(std::span<const Turn> turns);

struct StripOptions {
    // Bracket pairs whose spans are treated as annotations.
    std::vector<std::pair<char, char>> brackets = {{'[', ']'}, {'(', ')'}};
    // Remove "*"-markers from the '*' through the end of the token.
    bool strip_star_markers = true;
};

struct StripReport {
    int unbalanced = 0; // opening brackets with no closer; removed through end of token
};

/// Removes annotation spans ("[...]", "(...)") and "*"-markers from text,
/// leaving canonical speaker labels untouched. Whitespace is collapsed.
std::string strip_annotations(std::string_view text, StripReport* report = nullptr,
                              const StripOptions& options = {});

/// Merges consecutive same-label words into segments. A gap greater than
/// gap_s between words splits the segment; a label change always splits.
std::vector<SpeakerSegment> words_to_segments(std::span<const TimedWord> words, double gap_s,
                                              std::string audio_id = "");

} // namespace talkturn
