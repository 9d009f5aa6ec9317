#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexrel {

enum class Pos { Noun, Adjective, Verb };

std::optional<Pos> parse_pos(std::string_view code);
std::string_view pos_code(Pos pos);

// Morphosyntactic tag for the given part of speech (IZE / ADJ / ADI).
std::string_view pos_tag(Pos pos);
std::optional<Pos> pos_from_tag(std::string_view tag);

bool is_pos_tag(std::string_view tag);

// A bag of tags kept unique and in canonical display order: the POS tag
// first, then the fixed inventory, then opaque tags (S:nnn) lexicographically.
class TagBag {
public:
    TagBag() = default;
    explicit TagBag(std::vector<std::string> tags);

    bool contains(std::string_view tag) const;
    void add(const std::string& tag);

    const std::vector<std::string>& items() const { return tags_; }
    bool empty() const { return tags_.empty(); }
    std::size_t size() const { return tags_.size(); }

    // Exactly one POS tag, or empty if the invariant is violated.
    std::string pos_tag() const;

    bool operator==(const TagBag& other) const { return tags_ == other.tags_; }
    bool operator<(const TagBag& other) const { return tags_ < other.tags_; }

private:
    std::vector<std::string> tags_;
};

std::string join_tags(const TagBag& tags);

}  // namespace lexrel
