#include "talkturn/tokenizer.hpp"

#include <array>
#include <fstream>
#include <limits>

#include "talkturn/errors.hpp"
#include "talkturn/strings.hpp"

namespace talkturn {

int WhitespaceTokenizer::count_tokens(std::string_view text) const {
    return static_cast<int>(split_whitespace_views(text).size());
}

std::string WhitespaceTokenizer::truncate_to_last_n_tokens(std::string_view text, int n) const {
    if (n <= 0) return "";
    auto tokens = split_whitespace_views(text);
    if (static_cast<int>(tokens.size()) <= n) return collapse_whitespace(text);
    std::string out;
    for (size_t i = tokens.size() - static_cast<size_t>(n); i < tokens.size(); ++i) {
        if (!out.empty()) out += ' ';
        out.append(tokens[i]);
    }
    return out;
}

namespace {

// GPT-2-style byte <-> unicode table: printable bytes keep their codepoint,
// the rest are shifted into 256+.
struct ByteUnicode {
    std::array<char32_t, 256> to_unicode{};
    std::map<char32_t, unsigned char> to_byte;

    ByteUnicode() {
        std::array<bool, 256> printable{};
        auto mark = [&](int lo, int hi) {
            for (int b = lo; b <= hi; ++b) printable[static_cast<size_t>(b)] = true;
        };
        mark('!', '~');
        mark(0xA1, 0xAC);
        mark(0xAE, 0xFF);
        char32_t next = 256;
        for (int b = 0; b < 256; ++b) {
            char32_t cp = printable[static_cast<size_t>(b)] ? static_cast<char32_t>(b) : next++;
            to_unicode[static_cast<size_t>(b)] = cp;
            to_byte[cp] = static_cast<unsigned char>(b);
        }
    }
};

const ByteUnicode& byte_unicode() {
    static const ByteUnicode table;
    return table;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

std::vector<char32_t> decode_utf8(std::string_view s) {
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        char32_t cp = 0;
        int extra = 0;
        if (c < 0x80) {
            cp = c;
        } else if ((c >> 5) == 0x6) {
            cp = c & 0x1F;
            extra = 1;
        } else if ((c >> 4) == 0xE) {
            cp = c & 0x0F;
            extra = 2;
        } else if ((c >> 3) == 0x1E) {
            cp = c & 0x07;
            extra = 3;
        } else {
            cp = 0xFFFD; // stray continuation byte
        }
        ++i;
        for (int k = 0; k < extra && i < s.size(); ++k, ++i) {
            cp = (cp << 6) | (static_cast<unsigned char>(s[i]) & 0x3F);
        }
        cps.push_back(cp);
    }
    return cps;
}

// Splits into pieces of the form [ ]?[^ ]+ with a single leading space folded
// into the word; extra whitespace collapses first.
std::vector<std::string> pre_tokenize(std::string_view text) {
    std::string normalized = collapse_whitespace(text);
    std::vector<std::string> pieces;
    size_t i = 0;
    bool first = true;
    while (i < normalized.size()) {
        size_t j = normalized.find(' ', i);
        if (j == std::string::npos) j = normalized.size();
        std::string piece = first ? normalized.substr(i, j - i)
                                  : " " + normalized.substr(i, j - i);
        pieces.push_back(std::move(piece));
        first = false;
        i = j + 1;
    }
    return pieces;
}

} // namespace

BpeTokenizer BpeTokenizer::from_files(const std::filesystem::path& merges_path) {
    std::ifstream in(merges_path);
    if (!in) throw ValidationError("cannot open merges file " + merges_path.string());
    BpeTokenizer tok;
    std::string line;
    int rank = 0;
    bool first_line = true;
    while (std::getline(in, line)) {
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (first_line && starts_with(view, "#")) {
            first_line = false;
            continue; // e.g. "#version: 0.2"
        }
        first_line = false;
        auto parts = split_whitespace_views(view);
        if (parts.size() != 2) {
            throw ValidationError("malformed merges line in " + merges_path.string() + ": \"" +
                                  std::string(view) + "\"");
        }
        tok.merge_ranks_.emplace(
            std::make_pair(std::string(parts[0]), std::string(parts[1])), rank++);
    }
    if (tok.merge_ranks_.empty()) {
        throw ValidationError("merges file " + merges_path.string() + " is empty");
    }
    return tok;
}

std::vector<std::string> BpeTokenizer::encode_piece(const std::string& piece) const {
    const auto& table = byte_unicode();
    std::vector<std::string> symbols;
    for (unsigned char byte : piece) {
        std::string symbol;
        append_utf8(symbol, table.to_unicode[byte]);
        symbols.push_back(std::move(symbol));
    }
    // Merge the lowest-ranked adjacent pair until no merge applies.
    while (symbols.size() > 1) {
        int best_rank = std::numeric_limits<int>::max();
        size_t best_pos = 0;
        for (size_t i = 0; i + 1 < symbols.size(); ++i) {
            auto it = merge_ranks_.find(std::make_pair(symbols[i], symbols[i + 1]));
            if (it != merge_ranks_.end() && it->second < best_rank) {
                best_rank = it->second;
                best_pos = i;
            }
        }
        if (best_rank == std::numeric_limits<int>::max()) break;
        symbols[best_pos] += symbols[best_pos + 1];
        symbols.erase(symbols.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1);
    }
    return symbols;
}

std::vector<std::string> BpeTokenizer::encode(std::string_view text) const {
    std::vector<std::string> tokens;
    for (const std::string& piece : pre_tokenize(text)) {
        auto piece_tokens = encode_piece(piece);
        tokens.insert(tokens.end(), piece_tokens.begin(), piece_tokens.end());
    }
    return tokens;
}

std::string BpeTokenizer::decode(const std::vector<std::string>& tokens) const {
    const auto& table = byte_unicode();
    std::string bytes;
    for (const std::string& token : tokens) {
        for (char32_t cp : decode_utf8(token)) {
            auto it = table.to_byte.find(cp);
            if (it != table.to_byte.end()) bytes += static_cast<char>(it->second);
        }
    }
    return bytes;
}

int BpeTokenizer::count_tokens(std::string_view text) const {
    return static_cast<int>(encode(text).size());
}

std::string BpeTokenizer::truncate_to_last_n_tokens(std::string_view text, int n) const {
    if (n <= 0) return "";
    auto tokens = encode(text);
    if (static_cast<int>(tokens.size()) <= n) return collapse_whitespace(text);
    // Re-encoding a decoded suffix can resegment at the cut; shrink until the
    // count is guaranteed within budget.
    for (int k = n; k > 0; --k) {
        std::vector<std::string> tail(tokens.end() - k, tokens.end());
        std::string candidate = std::string(trim(decode(tail)));
        if (count_tokens(candidate) <= n) return candidate;
    }
    return "";
}

std::shared_ptr<const Tokenizer> make_tokenizer(const std::string& tokenizer_id,
                                                const TokenizerFiles& files) {
    if (tokenizer_id == "whitespace") return std::make_shared<WhitespaceTokenizer>();
    if (tokenizer_id == "bpe") {
        if (!files.bpe_merges) {
            throw ValidationError("tokenizer \"bpe\" requires a merges file");
        }
        return std::make_shared<BpeTokenizer>(BpeTokenizer::from_files(*files.bpe_merges));
    }
    throw ValidationError("unknown tokenizer_id \"" + tokenizer_id + "\"");
}

} // namespace talkturn
