#include "lexrel/morph.hpp"

#include <algorithm>
#include <cctype>
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

std::vector<std::string> tsv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::optional<TagBag> punct_tags(const std::string& surface) {
    if (surface == ".") return TagBag({"PUNT", "PUNT_PUNT"});
    if (surface == ";") return TagBag({"PUNT", "PKOMA"});
    if (surface == ",") return TagBag({"PUNT", "KOMA"});
    return std::nullopt;
}

}  // namespace

Lexicon Lexicon::load(std::istream& in) {
    Lexicon lex;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (comment_or_blank(line)) continue;
        auto fields = tsv_fields(line);
        if (fields.size() < 2) continue;
        LexEntry entry;
        entry.pos_tag = fields[1];
        if (fields.size() > 2) entry.extra_tags = split(fields[2], ',');
        lex.add(fields[0], std::move(entry));
    }
    return lex;
}

void Lexicon::add(const std::string& lemma, LexEntry entry) {
    auto& list = entries_[lemma];
    // Lemmas are unique per (lemma, POS); a re-add replaces the old tags.
    for (auto& existing : list) {
        if (existing.pos_tag == entry.pos_tag) {
            existing = std::move(entry);
            return;
        }
    }
    list.push_back(std::move(entry));
}

const std::vector<LexEntry>* Lexicon::lookup(const std::string& lemma) const {
    auto it = entries_.find(lemma);
    return it == entries_.end() ? nullptr : &it->second;
}

bool Lexicon::has_pos(const std::string& lemma, Pos pos) const {
    const auto* list = lookup(lemma);
    if (!list) return false;
    return std::any_of(list->begin(), list->end(), [&](const LexEntry& e) {
        return e.pos_tag == pos_tag(pos) ||
               (e.pos_tag == "IZE-ADI" && (pos == Pos::Noun || pos == Pos::Verb));
    });
}

std::optional<Pos> Lexicon::first_pos(const std::string& lemma) const {
    const auto* list = lookup(lemma);
    if (!list) return std::nullopt;
    for (Pos pos : {Pos::Noun, Pos::Adjective, Pos::Verb}) {
        if (has_pos(lemma, pos)) return pos;
    }
    return std::nullopt;
}

SuffixTable SuffixTable::load(std::istream& in) {
    SuffixTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (comment_or_blank(line)) continue;
        auto fields = tsv_fields(line);
        if (fields.size() < 3) continue;
        table.add(SuffixEntry{fields[0], split(fields[1], ','),
                              split(fields[2], ',')});
    }
    return table;
}

void SuffixTable::add(SuffixEntry entry) {
    auto pos = std::find_if(entries_.begin(), entries_.end(),
                            [&](const SuffixEntry& e) {
                                return e.suffix.size() < entry.suffix.size();
                            });
    entries_.insert(pos, std::move(entry));
}

std::vector<Reading> analyze_token(const std::string& surface,
                                   const Lexicon& lex, const SuffixTable& suf,
                                   bool sentence_initial) {
    if (auto punct = punct_tags(surface)) {
        return {Reading{surface, *punct, std::nullopt}};
    }

    std::string form = surface;
    bool folded = false;
    if (sentence_initial && !form.empty() &&
        std::isupper(static_cast<unsigned char>(form[0]))) {
        form[0] = static_cast<char>(
            std::tolower(static_cast<unsigned char>(form[0])));
        folded = true;
    }

    std::vector<Reading> readings;

    // Zero suffix: bare absolutive.
    if (const auto* list = lex.lookup(form)) {
        for (const auto& entry : *list) {
            std::vector<std::string> tags = entry.extra_tags;
            tags.push_back(entry.pos_tag);
            tags.push_back("ZERO");
            tags.push_back("ABS");
            tags.push_back("NOTGELGEN");
            readings.push_back(Reading{form, TagBag(std::move(tags)), {}});
        }
    }

    // Every stem + suffix segmentation with a lexical stem.
    for (const auto& sfx : suf.entries()) {
        if (form.size() <= sfx.suffix.size()) continue;
        if (form.compare(form.size() - sfx.suffix.size(), sfx.suffix.size(),
                         sfx.suffix) != 0)
            continue;
        std::string stem = form.substr(0, form.size() - sfx.suffix.size());
        const auto* list = lex.lookup(stem);
        if (!list) continue;
        for (const auto& entry : *list) {
            if (std::find(sfx.attaches_to.begin(), sfx.attaches_to.end(),
                          entry.pos_tag) == sfx.attaches_to.end())
                continue;
            std::vector<std::string> tags = entry.extra_tags;
            tags.push_back(entry.pos_tag);
            tags.insert(tags.end(), sfx.tags.begin(), sfx.tags.end());
            readings.push_back(Reading{stem, TagBag(std::move(tags)), {}});
        }
    }

    if (readings.empty()) {
        readings.push_back(Reading{form, TagBag({"IZE", "GUESS"}), {}});
    }

    if (folded) {
        for (auto& r : readings) r.tags.add("HAS_MAI");
    }

    std::sort(readings.begin(), readings.end(),
              [](const Reading& a, const Reading& b) {
                  if (a.lemma != b.lemma) return a.lemma < b.lemma;
                  return a.tags < b.tags;
              });
    readings.erase(std::unique(readings.begin(), readings.end()),
                   readings.end());
    return readings;
}

std::vector<Cohort> analyze_sentence(const TokenizedSentence& sentence,
                                     const Lexicon& lex,
                                     const SuffixTable& suf) {
    std::vector<Cohort> cohorts;
    cohorts.reserve(sentence.tokens.size());
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        cohorts.push_back(Cohort{sentence.tokens[i],
                                 analyze_token(sentence.tokens[i], lex, suf,
                                               i == 0),
                                 i});
    }
    return cohorts;
}

}  // namespace lexrel
