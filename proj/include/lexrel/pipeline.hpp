#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexrel/corpus.hpp"
#include "lexrel/deriv.hpp"
#include "lexrel/eval.hpp"
#include "lexrel/extract.hpp"
#include "lexrel/morph.hpp"
#include "lexrel/rules.hpp"

namespace lexrel {

struct PipelineConfig {
    std::string entries_path;
    std::string lexicon_path;
    std::string suffixes_path;
    std::string affixes_path;
    std::map<Pos, std::string> rules_paths;  // one rule file per POS
    std::string relators_path;
    std::string gold_path;
    std::string out_dir;
    std::optional<Pos> pos_filter;
    bool trace = false;
};

class Pipeline {
public:
    static Pipeline load(const PipelineConfig& config);

    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<std::string>& ingest_diagnostics() const {
        return ingest_diagnostics_;
    }
    const Lexicon& lexicon() const { return lexicon_; }
    const SuffixTable& suffixes() const { return suffixes_; }
    const AffixTable& affixes() const { return affixes_; }
    const RelatorTable& relators() const { return relators_; }
    const RuleSet* rules_for(Pos pos) const;

    std::vector<std::vector<Cohort>> analyze_sense(const Entry& entry,
                                                   const Sense& sense) const;
    std::vector<std::vector<Cohort>> map_sense(const Entry& entry,
                                               const Sense& sense) const;

    // Mapped relations for every sense of every entry, plus one DERIV
    // record per segmentable headword (attached to sense 1).
    std::vector<RelationRecord> extract_all() const;
    std::vector<DerivationRecord> derive_all() const;

    long total_senses() const;

private:
    std::vector<Entry> entries_;
    std::vector<std::string> ingest_diagnostics_;
    Lexicon lexicon_;
    SuffixTable suffixes_;
    AffixTable affixes_;
    RelatorTable relators_;
    std::map<Pos, RuleSet> rules_;
    std::optional<Pos> pos_filter_;
};

// Trace listing in the cohort/reading shape: a "<surface>" line followed
// by indented reading lines, labels last.
std::string render_trace(const Entry& entry, const Sense& sense,
                         const std::vector<std::vector<Cohort>>& sentences);

std::string render_relations_tsv(const std::vector<RelationRecord>& records);
std::string render_derivations_tsv(const std::vector<DerivationRecord>& records);

std::string group_digits(long value);
// "2,943 (7.1%)" with exact division, half-away-from-zero at 1 decimal.
std::string format_count_percent(long count, long denominator);

}  // namespace lexrel
