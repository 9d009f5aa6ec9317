#include "lexrel/tags.hpp"

#include <algorithm>
#include <array>

namespace lexrel {

namespace {

// Display order for the fixed tag inventory. POS tags come first so a
// reading line always starts with its category.
constexpr std::array<std::string_view, 27> kTagOrder = {
    "IZE",  "ADJ",   "ADI",  "IZE-ADI", "PUNT",     "ARR",     "IZL",
    "IZLG", "ADLG",  "DEK",  "ZERO",    "ABS",      "GEN",     "DAT",
    "INS",  "NUMS",  "MUGM", "MG",      "AORG",     "NOTGELGEN",
    "HAS_MAI", "GUESS", "PUNT_PUNT", "PKOMA", "KOMA", "DEF_HASI", "DEF_BUKA",
};

int tag_rank(std::string_view tag) {
    for (std::size_t i = 0; i < kTagOrder.size(); ++i) {
        if (kTagOrder[i] == tag) return static_cast<int>(i);
    }
    return static_cast<int>(kTagOrder.size());
}

bool tag_less(const std::string& a, const std::string& b) {
    int ra = tag_rank(a);
    int rb = tag_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

}  // namespace

std::optional<Pos> parse_pos(std::string_view code) {
    if (code == "noun") return Pos::Noun;
    if (code == "adj") return Pos::Adjective;
    if (code == "verb") return Pos::Verb;
    return std::nullopt;
}

std::string_view pos_code(Pos pos) {
    switch (pos) {
        case Pos::Noun: return "noun";
        case Pos::Adjective: return "adj";
        case Pos::Verb: return "verb";
    }
    return "noun";
}

std::string_view pos_tag(Pos pos) {
    switch (pos) {
        case Pos::Noun: return "IZE";
        case Pos::Adjective: return "ADJ";
        case Pos::Verb: return "ADI";
    }
    return "IZE";
}

std::optional<Pos> pos_from_tag(std::string_view tag) {
    if (tag == "IZE") return Pos::Noun;
    if (tag == "ADJ") return Pos::Adjective;
    if (tag == "ADI") return Pos::Verb;
    return std::nullopt;
}

bool is_pos_tag(std::string_view tag) {
    return tag == "IZE" || tag == "ADJ" || tag == "ADI" || tag == "IZE-ADI" ||
           tag == "PUNT";
}

TagBag::TagBag(std::vector<std::string> tags) : tags_(std::move(tags)) {
    std::sort(tags_.begin(), tags_.end(), tag_less);
    tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());
}

bool TagBag::contains(std::string_view tag) const {
    return std::any_of(tags_.begin(), tags_.end(),
                       [&](const std::string& t) { return t == tag; });
}

void TagBag::add(const std::string& tag) {
    if (contains(tag)) return;
    tags_.insert(std::upper_bound(tags_.begin(), tags_.end(), tag, tag_less),
                 tag);
}

std::string TagBag::pos_tag() const {
    std::string found;
    for (const auto& t : tags_) {
        if (is_pos_tag(t)) {
            if (!found.empty()) return {};
            found = t;
        }
    }
    return found;
}

std::string join_tags(const TagBag& tags) {
    std::string out;
    for (const auto& t : tags.items()) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

}  // namespace lexrel
