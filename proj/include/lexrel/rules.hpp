#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexrel/morph.hpp"

namespace lexrel {

struct Atom {
    bool is_lemma = false;  // quoted string matches the lemma, else a tag
    std::string text;

    bool operator==(const Atom&) const = default;
};

// Conjunction of atoms; a reading must satisfy all of them.
using Alternative = std::vector<Atom>;

struct TagSet {
    std::string name;  // empty for inline sets
    std::vector<Alternative> alternatives;
};

struct Condition {
    int offset = 0;  // relative cohort position; never 0
    TagSet set;
    bool negated = false;
};

struct MapRule {
    std::string label;  // "&KIND-ID"
    TagSet target;
    std::vector<Condition> conditions;
};

struct RuleSet {
    std::map<std::string, TagSet> sets;
    std::vector<MapRule> rules;
    std::string source_id;
};

class RuleParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// DSL: `SET name = alt alt ... ;` and
//      `MAP (&LABEL) TARGET set-or-inline IF (offset set) (NOT offset set) ... ;`
// '/' unions atoms, parentheses group a conjunction, quotes mark a lemma.
RuleSet parse_rules(std::string_view text, std::string source_id = "");

bool match_reading(const Reading& reading, const Alternative& alt);
bool match_set(const Reading& reading, const TagSet& set);

std::vector<Cohort> apply_rules(std::vector<Cohort> sentence,
                                const RuleSet& rules);

}  // namespace lexrel
