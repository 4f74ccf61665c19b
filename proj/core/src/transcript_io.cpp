#include "talkturn/transcript_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "talkturn/errors.hpp"
#include "talkturn/strings.hpp"

namespace talkturn {

namespace {

double parse_double(std::string_view field, const std::filesystem::path& path, size_t line_no,
                    const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": bad " + what +
                              " \"" + std::string(field) + "\"");
    }
    return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

} // namespace

std::vector<Utterance> read_utterances(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::vector<Utterance> utterances;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 5) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": expected 5 tab-separated fields, got " +
                                  std::to_string(fields.size()));
        }
        Utterance u;
        u.audio_id = std::string(fields[0]);
        u.speaker_id = std::string(fields[1]);
        u.start_s = parse_double(fields[2], path, line_no, "start_s");
        u.end_s = parse_double(fields[3], path, line_no, "end_s");
        u.text = std::string(fields[4]);
        if (u.audio_id.empty() || u.speaker_id.empty()) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": empty audio_id or speaker_id");
        }
        if (u.start_s < 0.0 || !(u.end_s > u.start_s)) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": utterance must satisfy 0 <= start_s < end_s");
        }
        utterances.push_back(std::move(u));
    }
    return utterances;
}

void write_utterances(const std::vector<Utterance>& utterances,
                      const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    for (const Utterance& u : utterances) {
        if (u.text.find('\t') != std::string::npos || u.text.find('\n') != std::string::npos) {
            throw ValidationError("utterance text may not contain tabs or newlines (audio " +
                                  u.audio_id + ")");
        }
        if (!(u.end_s > u.start_s)) {
            throw ValidationError("utterance must satisfy end_s > start_s (audio " + u.audio_id +
                                  ")");
        }
        out << u.audio_id << '\t' << u.speaker_id << '\t' << format_fixed(u.start_s, 3) << '\t'
            << format_fixed(u.end_s, 3) << '\t' << u.text << '\n';
    }
}

std::vector<SpeakerSegment> read_rttm(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::vector<SpeakerSegment> segments;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty() || starts_with(view, ";;")) continue;
        auto fields = split_whitespace_views(view);
        if (fields.size() < 9 || fields[0] != "SPEAKER") {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": malformed RTTM line");
        }
        const double start = parse_double(fields[3], path, line_no, "start");
        const double dur = parse_double(fields[4], path, line_no, "duration");
        if (dur <= 0.0) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": non-positive segment duration");
        }
        segments.push_back(SpeakerSegment{std::string(fields[1]),
                                          SpeakerLabel::from_key(fields[7]), start, start + dur});
    }
    return segments;
}

void write_rttm(const std::vector<SpeakerSegment>& segments, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    for (const SpeakerSegment& s : segments) {
        if (s.label.is_unlabeled()) {
            throw ValidationError("cannot write unlabeled segment to RTTM (audio " + s.audio_id +
                                  ")");
        }
        if (!(s.end_s > s.start_s)) {
            throw ValidationError("segment must satisfy end_s > start_s (audio " + s.audio_id +
                                  ")");
        }
        out << "SPEAKER " << s.audio_id << " 1 " << format_fixed(s.start_s, 3) << ' '
            << format_fixed(s.end_s - s.start_s, 3) << " <NA> <NA> " << s.label.key()
            << " <NA> <NA>\n";
    }
}

} // namespace talkturn
