#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexrel/morph.hpp"
#include "lexrel/tags.hpp"

namespace lexrel {

enum class RelKind { Syn, Gen, Relator, Deriv };

std::string_view rel_kind_code(RelKind kind);
std::optional<RelKind> parse_rel_kind(std::string_view code);

struct RelatorInfo {
    std::vector<std::string> relation_types;  // Table-row order
    Pos related_pos = Pos::Noun;
    std::string note;
};

class RelatorTable {
public:
    // TSV: relatorId<TAB>headwordPOS<TAB>relatedPOS<TAB>types(comma-sep)[<TAB>note]
    static RelatorTable load(std::istream& in);

    void add(const std::string& relator_id, Pos headword_pos, RelatorInfo info);
    const RelatorInfo* lookup(const std::string& relator_id,
                              Pos headword_pos) const;

private:
    std::map<std::pair<std::string, Pos>, RelatorInfo> rows_;
};

struct Evidence {
    std::size_t sentence_index = 0;
    std::vector<std::size_t> cohort_indices;

    bool operator==(const Evidence&) const = default;
};

struct RelationRecord {
    std::string headword;
    Pos pos = Pos::Noun;
    int sense_number = 0;
    RelKind kind = RelKind::Syn;
    std::vector<std::string> candidate_types;
    std::string related_lemma;
    std::optional<std::string> relator_id;
    std::optional<std::string> rule_label;
    Evidence evidence;
};

class LabelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "MOTA10" -> "MOTA"; throws LabelError on an all-digit id.
std::string strip_variant(const std::string& label_id);

std::vector<RelationRecord> extract_relations(
    const Entry& entry, int sense_number,
    const std::vector<Cohort>& labeled, const RelatorTable& table,
    std::size_t sentence_index = 0);

}  // namespace lexrel
