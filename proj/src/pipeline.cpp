#include "lexrel/pipeline.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lexrel {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Pipeline Pipeline::load(const PipelineConfig& config) {
    Pipeline p;
    {
        auto in = open_or_throw(config.entries_path);
        auto parsed = parse_entries(in);
        p.entries_ = std::move(parsed.entries);
        p.ingest_diagnostics_ = std::move(parsed.diagnostics);
    }
    {
        auto in = open_or_throw(config.lexicon_path);
        p.lexicon_ = Lexicon::load(in);
    }
    {
        auto in = open_or_throw(config.suffixes_path);
        p.suffixes_ = SuffixTable::load(in);
    }
    if (!config.affixes_path.empty()) {
        auto in = open_or_throw(config.affixes_path);
        p.affixes_ = AffixTable::load(in);
    }
    if (!config.relators_path.empty()) {
        auto in = open_or_throw(config.relators_path);
        p.relators_ = RelatorTable::load(in);
    }
    for (const auto& [pos, path] : config.rules_paths) {
        p.rules_.emplace(pos, parse_rules(slurp(path), path));
    }
    p.pos_filter_ = config.pos_filter;
    return p;
}

const RuleSet* Pipeline::rules_for(Pos pos) const {
    auto it = rules_.find(pos);
    return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::vector<Cohort>> Pipeline::analyze_sense(
    const Entry& entry, const Sense& sense) const {
    std::vector<std::vector<Cohort>> out;
    for (const auto& sentence : tokenize(sense, entry.headword))
        out.push_back(analyze_sentence(sentence, lexicon_, suffixes_));
    return out;
}

std::vector<std::vector<Cohort>> Pipeline::map_sense(
    const Entry& entry, const Sense& sense) const {
    auto sentences = analyze_sense(entry, sense);
    if (const RuleSet* rules = rules_for(entry.pos)) {
        for (auto& cohorts : sentences)
            cohorts = apply_rules(std::move(cohorts), *rules);
    }
    return sentences;
}

std::vector<RelationRecord> Pipeline::extract_all() const {
    std::vector<RelationRecord> records;
    for (const auto& entry : entries_) {
        if (pos_filter_ && entry.pos != *pos_filter_) continue;
        for (const auto& sense : entry.senses) {
            auto sentences = map_sense(entry, sense);
            for (std::size_t s = 0; s < sentences.size(); ++s) {
                auto recs = extract_relations(entry, sense.number,
                                              sentences[s], relators_, s);
                records.insert(records.end(), recs.begin(), recs.end());
            }
        }
        if (auto deriv =
                segment_headword(entry.headword, entry.pos, lexicon_,
                                 affixes_)) {
            RelationRecord rec;
            rec.headword = entry.headword;
            rec.pos = entry.pos;
            rec.sense_number = 1;
            rec.kind = RelKind::Deriv;
            rec.candidate_types = {"Derivation"};
            rec.related_lemma = deriv->root;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<DerivationRecord> Pipeline::derive_all() const {
    std::vector<DerivationRecord> records;
    for (const auto& entry : entries_) {
        if (pos_filter_ && entry.pos != *pos_filter_) continue;
        if (auto rec = segment_headword(entry.headword, entry.pos, lexicon_,
                                        affixes_))
            records.push_back(std::move(*rec));
    }
    return records;
}

long Pipeline::total_senses() const {
    long n = 0;
    for (const auto& entry : entries_) {
        if (pos_filter_ && entry.pos != *pos_filter_) continue;
        n += static_cast<long>(entry.senses.size());
    }
    return n;
}

std::string render_trace(const Entry& entry, const Sense& sense,
                         const std::vector<std::vector<Cohort>>& sentences) {
    std::ostringstream out;
    out << "/<@@headword " << entry.headword << ">/<ID>/\n";
    out << "/<@@POS " << pos_code(entry.pos) << ">/<ID>/\n";
    out << "/<@@sense " << sense.number << ">/<ID>/\n";
    for (const auto& cohorts : sentences) {
        for (const auto& cohort : cohorts) {
            out << "\"<" << cohort.surface << ">\"\n";
            for (const auto& reading : cohort.readings) {
                out << "\t\"" << reading.lemma << "\" "
                    << join_tags(reading.tags);
                if (reading.map_label) out << ' ' << *reading.map_label;
                out << '\n';
            }
        }
    }
    return out.str();
}

std::string render_relations_tsv(const std::vector<RelationRecord>& records) {
    std::ostringstream out;
    out << "headword\tpos\tsense\tkind\trelatorId\trelatedLemma\t"
           "candidateTypes\truleLabel\tevidence\n";
    for (const auto& rec : records) {
        out << rec.headword << '\t' << pos_code(rec.pos) << '\t'
            << rec.sense_number << '\t' << rel_kind_code(rec.kind) << '\t'
            << rec.relator_id.value_or("") << '\t' << rec.related_lemma
            << '\t';
        for (std::size_t i = 0; i < rec.candidate_types.size(); ++i) {
            if (i) out << ',';
            out << rec.candidate_types[i];
        }
        out << '\t' << rec.rule_label.value_or("") << '\t';
        out << 's' << rec.evidence.sentence_index;
        for (std::size_t idx : rec.evidence.cohort_indices)
            out << ":c" << idx;
        out << '\n';
    }
    return out.str();
}

std::string render_derivations_tsv(
    const std::vector<DerivationRecord>& records) {
    std::ostringstream out;
    out << "headword\troot\taffix\tposition\trootPOS\n";
    for (const auto& rec : records) {
        out << rec.headword << '\t' << rec.root << '\t' << rec.affix << '\t'
            << (rec.affix_position == AffixPosition::Prefix ? "prefix"
                                                            : "suffix")
            << '\t' << pos_code(rec.root_pos) << '\n';
    }
    return out.str();
}

std::string group_digits(long value) {
    std::string digits = std::to_string(value);
    std::string out;
    int count = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (count && count % 3 == 0 && *it != '-') out += ',';
        out += *it;
        ++count;
    }
    return {out.rbegin(), out.rend()};
}

std::string format_count_percent(long count, long denominator) {
    std::string out = group_digits(count);
    if (denominator > 0) {
        double pct = round_half_away(
            100.0 * static_cast<double>(count) /
                static_cast<double>(denominator),
            1);
        std::ostringstream buf;
        buf.setf(std::ios::fixed);
        buf.precision(1);
        buf << pct;
        out += " (" + buf.str() + "%)";
    }
    return out;
}

}  // namespace lexrel
