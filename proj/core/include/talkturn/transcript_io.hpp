#pragma once

#include <filesystem>
#include <vector>

#include "talkturn/transcript.hpp"

namespace talkturn {

// Utterance interchange: one record per line, tab-separated fields
//   audio_id <TAB> speaker_id <TAB> start_s <TAB> end_s <TAB> text
// Times are rendered with millisecond precision. UTF-8 throughout.

std::vector<Utterance> read_utterances(const std::filesystem::path& path);
void write_utterances(const std::vector<Utterance>& utterances, const std::filesystem::path& path);

// RTTM interchange, one segment per line:
//   SPEAKER <audio_id> 1 <start> <dur> <NA> <NA> <label> <NA> <NA>
// with start/dur carrying 3 decimal places. Lines starting with ";;" are
// comments. Labels "S1".."S5" read back as canonical labels.

std::vector<SpeakerSegment> read_rttm(const std::filesystem::path& path);
void write_rttm(const std::vector<SpeakerSegment>& segments, const std::filesystem::path& path);

} // namespace talkturn
