#include "talkturn/speaker_label.hpp"

#include "talkturn/errors.hpp"

namespace talkturn {

static bool shadows_canonical(std::string_view name) {
    return name.size() == 2 && name[0] == 'S' && name[1] >= '1' &&
           name[1] <= '0' + SpeakerLabel::max_canonical;
}

static bool valid_oov_body(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (c == '[' || c == ']' || c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
    }
    return !shadows_canonical(name);
}

SpeakerLabel SpeakerLabel::canonical(int index) {
    if (index < 1 || index > max_canonical) {
        throw ValidationError("canonical speaker index out of range [1," +
                              std::to_string(max_canonical) + "]: " + std::to_string(index));
    }
    SpeakerLabel l;
    l.kind_ = Kind::canonical;
    l.index_ = index;
    return l;
}

SpeakerLabel SpeakerLabel::oov(std::string name) {
    if (!valid_oov_body(name)) {
        throw ValidationError("invalid OOV speaker name: \"" + name + "\"");
    }
    SpeakerLabel l;
    l.kind_ = Kind::oov;
    l.name_ = std::move(name);
    return l;
}

std::optional<SpeakerLabel> SpeakerLabel::from_token(std::string_view token) {
    if (token.size() < 3 || token.front() != '[' || token.back() != ']') return std::nullopt;
    std::string_view body = token.substr(1, token.size() - 2);
    if (shadows_canonical(body)) return canonical(body[1] - '0');
    if (!valid_oov_body(body)) return std::nullopt;
    return oov(std::string(body));
}

SpeakerLabel SpeakerLabel::from_key(std::string_view key) {
    if (shadows_canonical(key)) return canonical(key[1] - '0');
    return oov(std::string(key));
}

std::string SpeakerLabel::render() const {
    switch (kind_) {
    case Kind::canonical: return "[S" + std::to_string(index_) + "]";
    case Kind::oov: return "[" + name_ + "]";
    case Kind::unlabeled: return "";
    }
    return "";
}

std::string SpeakerLabel::key() const {
    switch (kind_) {
    case Kind::canonical: return "S" + std::to_string(index_);
    case Kind::oov: return name_;
    case Kind::unlabeled: return "";
    }
    return "";
}

} // namespace talkturn
