#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexrel/extract.hpp"

namespace lexrel {

struct GoldKey {
    std::string headword;
    Pos pos = Pos::Noun;
    int sense_number = 0;

    auto operator<=>(const GoldKey&) const = default;
};

struct GoldPair {
    RelKind kind = RelKind::Syn;
    std::string related_lemma;

    auto operator<=>(const GoldPair&) const = default;
};

class GoldAnnotation {
public:
    // TSV: headword<TAB>pos<TAB>sense<TAB>kind<TAB>relatedLemma
    static GoldAnnotation load(std::istream& in);

    void add(const GoldKey& key, GoldPair pair);
    const std::map<GoldKey, std::vector<GoldPair>>& senses() const {
        return senses_;
    }
    bool contains(const GoldKey& key, const GoldPair& pair) const;
    bool has_sense(const GoldKey& key) const;

private:
    std::map<GoldKey, std::vector<GoldPair>> senses_;
};

struct EvalCounts {
    long target = 0;
    long ok = 0;
    long wrong = 0;

    long marked() const { return ok + wrong; }
    long missed() const { return target - ok; }

    EvalCounts& operator+=(const EvalCounts& other) {
        target += other.target;
        ok += other.ok;
        wrong += other.wrong;
        return *this;
    }
};

struct ScoreResult {
    std::map<RelKind, EvalCounts> per_kind;
    EvalCounts overall;
    std::vector<std::string> diagnostics;  // duplicate system records etc.
};

ScoreResult score(const std::vector<RelationRecord>& system,
                  const GoldAnnotation& gold);

// OK / Target as a percentage, half-away-from-zero at 1 decimal;
// absent when target == 0 (rendered as a blank cell).
std::optional<double> coverage(const EvalCounts& counts);
// Wrong / Marked, same rounding; absent when marked == 0.
std::optional<double> error_rate(const EvalCounts& counts);

double round_half_away(double value, int decimals);

struct DefStats {
    long total_defs = 0;
    long defs_with_relation = 0;
    long relations_marked = 0;
};

DefStats definition_stats(const std::vector<RelationRecord>& records,
                          long total_defs);

std::optional<double> def_coverage(const DefStats& stats);       // 1 decimal
std::optional<double> relations_per_def(const DefStats& stats);  // 2 decimals

std::string format_value(std::optional<double> value, int decimals);

// Aligned text table with SYN / GEN / Relator / Overall / Definitions rows.
std::string render_report(const ScoreResult& result, const DefStats& defs,
                          const std::string& title);

std::string render_counts_tsv(const ScoreResult& result, const DefStats& defs,
                              const std::string& sample);

}  // namespace lexrel
