#include "talkturn/transcript.hpp"

#include <algorithm>
#include <map>

#include "talkturn/errors.hpp"
#include "talkturn/strings.hpp"

namespace talkturn {

std::vector<Turn> parse_labeled_text(std::string_view text) {
    std::vector<Turn> turns;
    for (auto token : split_whitespace_views(text)) {
        if (auto label = SpeakerLabel::from_token(token)) {
            turns.push_back(Turn{*label, ""});
            continue;
        }
        if (turns.empty()) turns.push_back(Turn{SpeakerLabel::unlabeled(), ""});
        Turn& cur = turns.back();
        if (!cur.text.empty()) cur.text += ' ';
        cur.text.append(token);
    }
    return turns;
}

std::string render_labeled_text(std::span<const Turn> turns, const RenderOptions& options) {
    std::string out;
    for (const Turn& turn : turns) {
        if (turn.label.is_unlabeled() && !options.render_unlabeled) {
            throw ValidationError("cannot render unlabeled turn without render_unlabeled");
        }
        std::string label = turn.label.render();
        std::string_view text = trim(turn.text);
        if (label.empty() && text.empty()) continue;
        if (!out.empty()) out += ' ';
        out += label;
        if (!text.empty()) {
            if (!label.empty()) out += ' ';
            out += text;
        }
    }
    return out;
}

RelabelResult canonical_relabel(std::span<const Turn> turns) {
    RelabelResult result;
    std::map<SpeakerLabel, SpeakerLabel> assigned;
    int next = 1;
    result.turns.reserve(turns.size());
    for (const Turn& turn : turns) {
        if (turn.label.is_unlabeled()) {
            result.turns.push_back(turn);
            continue;
        }
        auto it = assigned.find(turn.label);
        if (it == assigned.end()) {
            if (next > SpeakerLabel::max_canonical) {
                throw ValidationError("more than " + std::to_string(SpeakerLabel::max_canonical) +
                                      " distinct speakers; label vocabulary exceeded");
            }
            it = assigned.emplace(turn.label, SpeakerLabel::canonical(next++)).first;
            result.mapping.emplace_back(turn.label, it->second);
        }
        result.turns.push_back(Turn{it->second, turn.text});
    }
    return result;
}

namespace {

bool is_canonical_label_span(std::string_view span) {
    auto label = SpeakerLabel::from_token(span);
    return label && label->is_canonical();
}

} // namespace

std::string strip_annotations(std::string_view text, StripReport* report,
                              const StripOptions& options) {
    std::string out;
    out.reserve(text.size());
    const size_t n = text.size();
    size_t i = 0;

    auto closer_for = [&](char c) -> char {
        for (auto [open, close] : options.brackets) {
            if (open == c) return close;
        }
        return '\0';
    };
    auto skip_to_token_end = [&](size_t from) {
        size_t k = from;
        while (k < n && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        return k;
    };

    while (i < n) {
        const char c = text[i];
        const char close = closer_for(c);
        if (close != '\0') {
            // Find the matching closer, depth-aware for nested spans.
            size_t j = i + 1;
            int depth = 1;
            while (j < n && depth > 0) {
                if (text[j] == c) ++depth;
                else if (text[j] == close) --depth;
                ++j;
            }
            if (depth == 0) {
                std::string_view span = text.substr(i, j - i);
                if (c == '[' && is_canonical_label_span(span)) {
                    out.append(span);
                } else {
                    out += ' ';
                }
                i = j;
            } else {
                // Unbalanced: remove through the end of the token.
                if (report) ++report->unbalanced;
                i = skip_to_token_end(i);
                out += ' ';
            }
        } else if (c == '*' && options.strip_star_markers) {
            // "*"-marker: drop from the '*' through the end of the token.
            i = skip_to_token_end(i);
            out += ' ';
        } else {
            out += c;
            ++i;
        }
    }
    return collapse_whitespace(out);
}

std::vector<SpeakerSegment> words_to_segments(std::span<const TimedWord> words, double gap_s,
                                              std::string audio_id) {
    std::vector<SpeakerSegment> segments;
    for (const TimedWord& w : words) {
        if (!segments.empty()) {
            SpeakerSegment& cur = segments.back();
            if (cur.label == w.label && w.start_s - cur.end_s <= gap_s) {
                cur.end_s = std::max(cur.end_s, w.end_s);
                continue;
            }
        }
        segments.push_back(SpeakerSegment{audio_id, w.label, w.start_s, w.end_s});
    }
    // Zero-width words that merged into nothing carry no time; drop them so
    // every emitted segment satisfies end > start.
    std::erase_if(segments, [](const SpeakerSegment& s) { return !(s.end_s > s.start_s); });
    return segments;
}

} // namespace talkturn
