#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexrel/corpus.hpp"
#include "lexrel/tags.hpp"

namespace lexrel {

struct Reading {
    std::string lemma;
    TagBag tags;
    std::optional<std::string> map_label;  // "&KIND-ID", attached by the rules

    bool operator==(const Reading&) const = default;
};

struct Cohort {
    std::string surface;
    std::vector<Reading> readings;
    std::size_t index = 0;

    bool operator==(const Cohort&) const = default;
};

struct LexEntry {
    std::string pos_tag;                  // IZE / ADJ / ADI / IZE-ADI
    std::vector<std::string> extra_tags;  // ARR, IZL, S:nnn, ...
};

class Lexicon {
public:
    // TSV: lemma<TAB>POS<TAB>extra-tags(comma-sep, may be empty)
    static Lexicon load(std::istream& in);

    void add(const std::string& lemma, LexEntry entry);
    const std::vector<LexEntry>* lookup(const std::string& lemma) const;
    bool has_pos(const std::string& lemma, Pos pos) const;
    std::optional<Pos> first_pos(const std::string& lemma) const;

private:
    std::map<std::string, std::vector<LexEntry>> entries_;
};

struct SuffixEntry {
    std::string suffix;
    std::vector<std::string> tags;
    std::vector<std::string> attaches_to;  // POS tags
};

class SuffixTable {
public:
    // TSV: suffix<TAB>tags(comma-sep)<TAB>attachesTo(comma-sep POS tags)
    static SuffixTable load(std::istream& in);

    void add(SuffixEntry entry);
    const std::vector<SuffixEntry>& entries() const { return entries_; }

private:
    std::vector<SuffixEntry> entries_;  // descending suffix length
};

std::vector<Reading> analyze_token(const std::string& surface,
                                   const Lexicon& lex, const SuffixTable& suf,
                                   bool sentence_initial = false);

std::vector<Cohort> analyze_sentence(const TokenizedSentence& sentence,
                                     const Lexicon& lex,
                                     const SuffixTable& suf);

}  // namespace lexrel
