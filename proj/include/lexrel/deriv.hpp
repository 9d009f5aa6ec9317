#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexrel/morph.hpp"
#include "lexrel/tags.hpp"

namespace lexrel {

enum class AffixPosition { Suffix, Prefix };

struct Affix {
    std::string text;
    AffixPosition position = AffixPosition::Suffix;
    Pos produces_pos = Pos::Noun;
    std::vector<Pos> root_pos;  // empty means ANY
};

class AffixTable {
public:
    // TSV: affix<TAB>suffix|prefix<TAB>producesPOS<TAB>rootPOS(comma-sep or ANY)
    static AffixTable load(std::istream& in);

    void add(Affix affix);
    const std::vector<Affix>& affixes() const { return affixes_; }

private:
    std::vector<Affix> affixes_;  // suffixes first, by descending length
};

struct DerivationRecord {
    std::string headword;
    std::string root;
    std::string affix;
    AffixPosition affix_position = AffixPosition::Suffix;
    Pos root_pos = Pos::Noun;
};

std::optional<DerivationRecord> segment_headword(const std::string& headword,
                                                 Pos pos, const Lexicon& lex,
                                                 const AffixTable& affixes);

}  // namespace lexrel
