#include "lexrel/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <set>
#include <sstream>

namespace lexrel {

namespace {

constexpr const char* kBlank = "—";  // em dash for empty table cells

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

}  // namespace

GoldAnnotation GoldAnnotation::load(std::istream& in) {
    GoldAnnotation gold;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = tsv_fields(line);
        if (fields.size() < 5) continue;
        auto pos = parse_pos(fields[1]);
        auto kind = parse_rel_kind(fields[3]);
        if (!pos || !kind) continue;
        int sense = std::atoi(fields[2].c_str());
        gold.add(GoldKey{fields[0], *pos, sense}, GoldPair{*kind, fields[4]});
    }
    return gold;
}

void GoldAnnotation::add(const GoldKey& key, GoldPair pair) {
    auto& pairs = senses_[key];
    if (std::find(pairs.begin(), pairs.end(), pair) != pairs.end()) return;
    pairs.push_back(std::move(pair));
}

bool GoldAnnotation::contains(const GoldKey& key, const GoldPair& pair) const {
    auto it = senses_.find(key);
    if (it == senses_.end()) return false;
    return std::find(it->second.begin(), it->second.end(), pair) !=
           it->second.end();
}

bool GoldAnnotation::has_sense(const GoldKey& key) const {
    return senses_.count(key) != 0;
}

ScoreResult score(const std::vector<RelationRecord>& system,
                  const GoldAnnotation& gold) {
    ScoreResult result;
    for (RelKind kind : {RelKind::Syn, RelKind::Gen, RelKind::Relator,
                         RelKind::Deriv}) {
        result.per_kind[kind] = EvalCounts{};
    }

    for (const auto& [key, pairs] : gold.senses()) {
        (void)key;
        for (const auto& pair : pairs) ++result.per_kind[pair.kind].target;
    }

    // Duplicate system records for the same (sense, kind, lemma) count once.
    std::set<std::tuple<GoldKey, RelKind, std::string>> seen;
    for (const auto& rec : system) {
        GoldKey key{rec.headword, rec.pos, rec.sense_number};
        auto id = std::make_tuple(key, rec.kind, rec.related_lemma);
        if (!seen.insert(id).second) {
            result.diagnostics.push_back(
                "duplicate record: " + rec.headword + "/" +
                std::to_string(rec.sense_number) + " " +
                std::string(rel_kind_code(rec.kind)) + " " +
                rec.related_lemma);
            continue;
        }
        if (gold.contains(key, GoldPair{rec.kind, rec.related_lemma})) {
            ++result.per_kind[rec.kind].ok;
        } else {
            ++result.per_kind[rec.kind].wrong;
        }
    }

    for (const auto& [kind, counts] : result.per_kind) {
        (void)kind;
        result.overall += counts;
    }
    return result;
}

double round_half_away(double value, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

std::optional<double> coverage(const EvalCounts& counts) {
    if (counts.target == 0) return std::nullopt;
    return round_half_away(100.0 * static_cast<double>(counts.ok) /
                               static_cast<double>(counts.target),
                           1);
}

std::optional<double> error_rate(const EvalCounts& counts) {
    if (counts.marked() == 0) return std::nullopt;
    return round_half_away(100.0 * static_cast<double>(counts.wrong) /
                               static_cast<double>(counts.marked()),
                           1);
}

DefStats definition_stats(const std::vector<RelationRecord>& records,
                          long total_defs) {
    DefStats stats;
    stats.total_defs = total_defs;
    stats.relations_marked = static_cast<long>(records.size());
    std::set<GoldKey> defs;
    for (const auto& rec : records)
        defs.insert(GoldKey{rec.headword, rec.pos, rec.sense_number});
    stats.defs_with_relation = static_cast<long>(defs.size());
    return stats;
}

std::optional<double> def_coverage(const DefStats& stats) {
    if (stats.total_defs == 0) return std::nullopt;
    return round_half_away(100.0 *
                               static_cast<double>(stats.defs_with_relation) /
                               static_cast<double>(stats.total_defs),
                           1);
}

std::optional<double> relations_per_def(const DefStats& stats) {
    if (stats.defs_with_relation == 0) return std::nullopt;
    return round_half_away(static_cast<double>(stats.relations_marked) /
                               static_cast<double>(stats.defs_with_relation),
                           2);
}

std::string format_value(std::optional<double> value, int decimals) {
    if (!value) return kBlank;
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << *value;
    return out.str();
}

namespace {

struct Row {
    std::string name;
    std::string target, ok, wrong, marked, missed, cov, err;
};

Row counts_row(const std::string& name, const EvalCounts& c) {
    Row row;
    row.name = name;
    row.target = std::to_string(c.target);
    row.ok = std::to_string(c.ok);
    row.wrong = c.wrong == 0 ? kBlank : std::to_string(c.wrong);
    row.marked = std::to_string(c.marked());
    row.missed = c.missed() == 0 ? kBlank : std::to_string(c.missed());
    row.cov = format_value(coverage(c), 1);
    row.err = format_value(error_rate(c), 1);
    return row;
}

std::size_t display_width(const std::string& s) {
    // The em dash is the only multibyte string we emit in tables.
    std::size_t width = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++width;
    return width;
}

void pad(std::ostringstream& out, const std::string& s, std::size_t width) {
    for (std::size_t i = display_width(s); i < width; ++i) out << ' ';
    out << s;
}

}  // namespace

std::string render_report(const ScoreResult& result, const DefStats& defs,
                          const std::string& title) {
    std::vector<Row> rows;
    rows.push_back(counts_row("SYN", result.per_kind.at(RelKind::Syn)));
    rows.push_back(counts_row("GEN", result.per_kind.at(RelKind::Gen)));
    rows.push_back(counts_row("Relator", result.per_kind.at(RelKind::Relator)));
    rows.push_back(counts_row("Overall", result.overall));

    Row drow;
    drow.name = "Definitions";
    drow.target = std::to_string(defs.total_defs);
    drow.ok = std::to_string(defs.defs_with_relation);
    drow.wrong = kBlank;
    drow.marked = std::to_string(defs.defs_with_relation);
    drow.missed = std::to_string(defs.total_defs - defs.defs_with_relation);
    drow.cov = format_value(def_coverage(defs), 1);
    drow.err = kBlank;
    rows.push_back(drow);

    std::ostringstream out;
    out << title << '\n';
    out << std::left << std::setw(12) << "" ;
    const char* heads[] = {"Target", "OK", "Wrong", "Marked",
                           "Missed", "Coverage (%)", "Error rate (%)"};
    for (const char* h : heads) {
        std::string s(h);
        for (std::size_t i = display_width(s); i < 16; ++i) out << ' ';
        out << s;
    }
    out << '\n';
    for (const auto& row : rows) {
        std::ostringstream line;
        line << row.name;
        for (std::size_t i = row.name.size(); i < 12; ++i) line << ' ';
        for (const std::string* cell :
             {&row.target, &row.ok, &row.wrong, &row.marked, &row.missed,
              &row.cov, &row.err})
            pad(line, *cell, 16);
        out << line.str() << '\n';
    }
    auto rpd = relations_per_def(defs);
    out << "Relations per definition: " << format_value(rpd, 2) << '\n';
    return out.str();
}

std::string render_counts_tsv(const ScoreResult& result, const DefStats& defs,
                              const std::string& sample) {
    std::ostringstream out;
    out << "sample\trow\ttarget\tok\twrong\tmarked\tmissed\tcoverage\terror_rate\n";
    auto emit = [&](const std::string& name, const EvalCounts& c) {
        out << sample << '\t' << name << '\t' << c.target << '\t' << c.ok
            << '\t' << c.wrong << '\t' << c.marked() << '\t' << c.missed()
            << '\t' << format_value(coverage(c), 1) << '\t'
            << format_value(error_rate(c), 1) << '\n';
    };
    emit("SYN", result.per_kind.at(RelKind::Syn));
    emit("GEN", result.per_kind.at(RelKind::Gen));
    emit("RELATOR", result.per_kind.at(RelKind::Relator));
    emit("DERIV", result.per_kind.at(RelKind::Deriv));
    emit("OVERALL", result.overall);
    out << sample << "\tDEFINITIONS\t" << defs.total_defs << '\t'
        << defs.defs_with_relation << "\t\t" << defs.defs_with_relation << '\t'
        << (defs.total_defs - defs.defs_with_relation) << '\t'
        << format_value(def_coverage(defs), 1) << "\t\n";
    return out.str();
}

}  // namespace lexrel
