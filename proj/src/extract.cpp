#include "lexrel/extract.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

namespace lexrel {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct LabelParts {
    std::string kind;  // ERLS / ERLG / ERLT / ERLZ
    std::string id;
};

std::optional<LabelParts> split_label(const std::string& label) {
    if (label.empty() || label[0] != '&') return std::nullopt;
    std::size_t dash = label.find('-');
    if (dash == std::string::npos || dash + 1 >= label.size())
        return std::nullopt;
    return LabelParts{label.substr(1, dash - 1), label.substr(dash + 1)};
}

const Reading* labeled_reading(const Cohort& cohort) {
    for (const auto& r : cohort.readings) {
        if (r.map_label) return &r;
    }
    return nullptr;
}

}  // namespace

std::string_view rel_kind_code(RelKind kind) {
    switch (kind) {
        case RelKind::Syn: return "SYN";
        case RelKind::Gen: return "GEN";
        case RelKind::Relator: return "RELATOR";
        case RelKind::Deriv: return "DERIV";
    }
    return "SYN";
}

std::optional<RelKind> parse_rel_kind(std::string_view code) {
    if (code == "SYN") return RelKind::Syn;
    if (code == "GEN") return RelKind::Gen;
    if (code == "RELATOR") return RelKind::Relator;
    if (code == "DERIV") return RelKind::Deriv;
    return std::nullopt;
}

RelatorTable RelatorTable::load(std::istream& in) {
    RelatorTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() < 4) continue;
        auto headword_pos = parse_pos(fields[1]);
        auto related_pos = parse_pos(fields[2]);
        if (!headword_pos || !related_pos) continue;
        RelatorInfo info;
        info.relation_types = split(fields[3], ',');
        info.related_pos = *related_pos;
        if (fields.size() > 4) info.note = fields[4];
        table.add(fields[0], *headword_pos, std::move(info));
    }
    return table;
}

void RelatorTable::add(const std::string& relator_id, Pos headword_pos,
                       RelatorInfo info) {
    rows_[{relator_id, headword_pos}] = std::move(info);
}

const RelatorInfo* RelatorTable::lookup(const std::string& relator_id,
                                        Pos headword_pos) const {
    auto it = rows_.find({relator_id, headword_pos});
    return it == rows_.end() ? nullptr : &it->second;
}

std::string strip_variant(const std::string& label_id) {
    if (label_id.empty()) throw LabelError("empty label id");
    std::size_t end = label_id.size();
    while (end > 0 && std::isdigit(static_cast<unsigned char>(label_id[end - 1])))
        --end;
    if (end == 0) throw LabelError("all-digit label id '" + label_id + "'");
    return label_id.substr(0, end);
}

std::vector<RelationRecord> extract_relations(
    const Entry& entry, int sense_number, const std::vector<Cohort>& labeled,
    const RelatorTable& table, std::size_t sentence_index) {
    // Relator words (&ERLT) contribute evidence to the related-term record
    // that shares the same base id; pairing is by id, not adjacency.
    std::map<std::string, std::vector<std::size_t>> relator_evidence;
    for (const auto& cohort : labeled) {
        const Reading* r = labeled_reading(cohort);
        if (!r) continue;
        auto parts = split_label(*r->map_label);
        if (parts && parts->kind == "ERLT")
            relator_evidence[strip_variant(parts->id)].push_back(cohort.index);
    }

    std::vector<RelationRecord> records;
    for (const auto& cohort : labeled) {
        const Reading* r = labeled_reading(cohort);
        if (!r) continue;
        auto parts = split_label(*r->map_label);
        if (!parts || parts->kind == "ERLT") continue;

        RelationRecord rec;
        rec.headword = entry.headword;
        rec.pos = entry.pos;
        rec.sense_number = sense_number;
        rec.related_lemma = r->lemma;
        rec.rule_label = *r->map_label;
        rec.evidence = Evidence{sentence_index, {cohort.index}};

        if (parts->kind == "ERLS") {
            rec.kind = RelKind::Syn;
            rec.candidate_types = {"Synonymy"};
        } else if (parts->kind == "ERLG") {
            rec.kind = RelKind::Gen;
            rec.candidate_types = {"Hypernymy", "Taxonomy"};
        } else if (parts->kind == "ERLZ") {
            rec.kind = RelKind::Relator;
            std::string id = strip_variant(parts->id);
            rec.relator_id = id;
            if (const RelatorInfo* info = table.lookup(id, entry.pos)) {
                rec.candidate_types = info->relation_types;
            } else {
                rec.candidate_types = {"UNKNOWN"};
            }
            auto ev = relator_evidence.find(id);
            if (ev != relator_evidence.end()) {
                for (std::size_t idx : ev->second)
                    rec.evidence.cohort_indices.push_back(idx);
                std::sort(rec.evidence.cohort_indices.begin(),
                          rec.evidence.cohort_indices.end());
            }
        } else {
            continue;  // unknown label kind; rule files are validated upstream
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace lexrel
