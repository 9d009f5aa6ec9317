#include "lexrel/deriv.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace lexrel {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Suffixes ordered before the prefix, longest first within each group.
bool affix_order(const Affix& a, const Affix& b) {
    if (a.position != b.position) return a.position == AffixPosition::Suffix;
    if (a.text.size() != b.text.size()) return a.text.size() > b.text.size();
    return a.text < b.text;
}

std::optional<Pos> root_pos_in_lexicon(const std::string& root,
                                       const Lexicon& lex,
                                       const std::vector<Pos>& constraint) {
    if (constraint.empty()) return lex.first_pos(root);
    for (Pos pos : constraint) {
        if (lex.has_pos(root, pos)) return pos;
    }
    return std::nullopt;
}

}  // namespace

AffixTable AffixTable::load(std::istream& in) {
    AffixTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        {
            std::string cur;
            for (char c : line) {
                if (c == '\t') {
                    fields.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            fields.push_back(cur);
        }
        if (fields.size() < 4) continue;
        Affix affix;
        affix.text = fields[0];
        affix.position = fields[1] == "prefix" ? AffixPosition::Prefix
                                               : AffixPosition::Suffix;
        auto produces = parse_pos(fields[2]);
        if (!produces) continue;
        affix.produces_pos = *produces;
        if (fields[3] != "ANY") {
            for (const auto& code : split(fields[3], ',')) {
                if (auto pos = parse_pos(code)) affix.root_pos.push_back(*pos);
            }
        }
        table.add(std::move(affix));
    }
    return table;
}

void AffixTable::add(Affix affix) {
    auto pos = std::upper_bound(affixes_.begin(), affixes_.end(), affix,
                                affix_order);
    affixes_.insert(pos, std::move(affix));
}

std::optional<DerivationRecord> segment_headword(const std::string& headword,
                                                 Pos pos, const Lexicon& lex,
                                                 const AffixTable& affixes) {
    for (const auto& affix : affixes.affixes()) {
        if (affix.produces_pos != pos) continue;
        if (headword.size() <= affix.text.size()) continue;

        std::string root;
        if (affix.position == AffixPosition::Suffix) {
            if (headword.compare(headword.size() - affix.text.size(),
                                 affix.text.size(), affix.text) != 0)
                continue;
            root = headword.substr(0, headword.size() - affix.text.size());
        } else {
            if (headword.compare(0, affix.text.size(), affix.text) != 0)
                continue;
            root = headword.substr(affix.text.size());
        }

        auto root_pos = root_pos_in_lexicon(root, lex, affix.root_pos);
        if (!root_pos) continue;
        return DerivationRecord{headword, root, affix.text, affix.position,
                                *root_pos};
    }
    return std::nullopt;
}

}  // namespace lexrel
