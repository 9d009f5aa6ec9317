#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexrel/pipeline.hpp"

namespace fs = std::filesystem;
using namespace lexrel;

namespace {

struct CliOptions {
    PipelineConfig config;
    std::vector<std::string> rule_args;  // "<pos>=<path>"
};

int resolve_rules(CliOptions& opts) {
    for (const auto& arg : opts.rule_args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos) {
            std::cerr << "lexrel: bad --rules argument '" << arg
                      << "', expected <pos>=<path>\n";
            return 1;
        }
        auto pos = parse_pos(arg.substr(0, eq));
        if (!pos) {
            std::cerr << "lexrel: unknown POS in --rules '" << arg << "'\n";
            return 1;
        }
        opts.config.rules_paths[*pos] = arg.substr(eq + 1);
    }
    return 0;
}

void write_output(const std::string& out_dir, const std::string& name,
                  const std::string& content) {
    fs::create_directories(out_dir);
    fs::path path = fs::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

int cmd_ingest(const CliOptions& opts) {
    std::ifstream in(opts.config.entries_path);
    if (!in) {
        std::cerr << "lexrel: cannot open " << opts.config.entries_path
                  << '\n';
        return 2;
    }
    auto parsed = parse_entries(in);
    for (const auto& d : parsed.diagnostics) std::cerr << "lexrel: " << d << '\n';
    write_output(opts.config.out_dir, "entries.norm.txt",
                 serialize_entries(parsed.entries));
    std::cout << "ingested " << parsed.entries.size() << " entries, "
              << parsed.diagnostics.size() << " records rejected\n";
    return 0;
}

int cmd_trace(const CliOptions& opts, bool mapped) {
    auto pipeline = Pipeline::load(opts.config);
    std::string out;
    for (const auto& entry : pipeline.entries()) {
        if (opts.config.pos_filter && entry.pos != *opts.config.pos_filter)
            continue;
        for (const auto& sense : entry.senses) {
            auto sentences = mapped ? pipeline.map_sense(entry, sense)
                                    : pipeline.analyze_sense(entry, sense);
            out += render_trace(entry, sense, sentences);
        }
    }
    write_output(opts.config.out_dir, mapped ? "mapped.txt" : "analysis.txt",
                 out);
    return 0;
}

int cmd_extract(const CliOptions& opts) {
    auto pipeline = Pipeline::load(opts.config);
    write_output(opts.config.out_dir, "relations.tsv",
                 render_relations_tsv(pipeline.extract_all()));
    return 0;
}

int cmd_deriv(const CliOptions& opts) {
    auto pipeline = Pipeline::load(opts.config);
    write_output(opts.config.out_dir, "derivations.tsv",
                 render_derivations_tsv(pipeline.derive_all()));
    return 0;
}

int cmd_eval(const CliOptions& opts) {
    auto pipeline = Pipeline::load(opts.config);
    std::ifstream gold_in(opts.config.gold_path);
    if (!gold_in) {
        std::cerr << "lexrel: cannot open " << opts.config.gold_path << '\n';
        return 2;
    }
    auto gold = GoldAnnotation::load(gold_in);
    auto records = pipeline.extract_all();
    auto result = score(records, gold);
    auto defs = definition_stats(records, pipeline.total_senses());
    for (const auto& d : result.diagnostics)
        std::cerr << "lexrel: " << d << '\n';
    write_output(opts.config.out_dir, "eval_report.txt",
                 render_report(result, defs, "Evaluation results"));
    write_output(opts.config.out_dir, "eval_counts.tsv",
                 render_counts_tsv(result, defs, "corpus"));
    return 0;
}

int cmd_stats(const CliOptions& opts) {
    auto pipeline = Pipeline::load(opts.config);
    auto records = pipeline.extract_all();
    long total = pipeline.total_senses();
    auto defs = definition_stats(records, total);
    long without = total - defs.defs_with_relation;

    std::ostringstream out;
    out << "total entries: " << group_digits(
               static_cast<long>(pipeline.entries().size()))
        << '\n';
    out << "total senses: " << group_digits(total) << '\n';
    out << "relations marked: " << group_digits(defs.relations_marked) << '\n';
    out << "senses with relation: "
        << format_count_percent(defs.defs_with_relation, total) << '\n';
    out << "senses without relation: " << format_count_percent(without, total)
        << '\n';
    out << "relations per definition: "
        << format_value(relations_per_def(defs), 2) << '\n';
    out << "# percentages are exact divisions over all senses of the\n"
           "# selected parts of speech, rounded half away from zero\n";
    write_output(opts.config.out_dir, "stats.txt", out.str());
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic-relation extraction pipeline for dictionary "
                 "definitions"};
    app.require_subcommand(1);

    CliOptions opts;
    std::string pos_arg;

    app.add_option("--entries", opts.config.entries_path, "entry interchange file");
    app.add_option("--lexicon", opts.config.lexicon_path, "lexicon TSV");
    app.add_option("--suffixes", opts.config.suffixes_path, "inflectional suffix TSV");
    app.add_option("--affixes", opts.config.affixes_path, "derivational affix TSV");
    app.add_option("--rules", opts.rule_args, "<pos>=<path>, repeatable");
    app.add_option("--relators", opts.config.relators_path, "relator table TSV");
    app.add_option("--gold", opts.config.gold_path, "gold annotation TSV");
    app.add_option("--out", opts.config.out_dir, "output directory")
        ->default_val(".");
    app.add_option("--pos", pos_arg, "restrict to one POS (noun|adj|verb)");
    app.add_flag("--trace", opts.config.trace, "verbose per-stage trace");

    auto* ingest = app.add_subcommand("ingest", "validate and normalize entries");
    auto* analyze = app.add_subcommand("analyze", "emit cohort listings");
    auto* map_cmd = app.add_subcommand("map", "apply mapping rules, emit labeled trace");
    auto* extract = app.add_subcommand("extract", "emit relation TSV");
    auto* deriv = app.add_subcommand("deriv", "emit derivation TSV");
    auto* eval_cmd = app.add_subcommand("eval", "score against gold, emit metric tables");
    auto* stats = app.add_subcommand("stats", "corpus-level relation statistics");
    // the data-file options live on the parent so they read the same for
    // every subcommand
    for (auto* sub : {ingest, analyze, map_cmd, extract, deriv, eval_cmd, stats})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (!pos_arg.empty()) {
        auto pos = parse_pos(pos_arg);
        if (!pos) {
            std::cerr << "lexrel: unknown POS '" << pos_arg << "'\n";
            return 1;
        }
        opts.config.pos_filter = *pos;
    }
    if (int rc = resolve_rules(opts); rc != 0) return rc;

    try {
        if (ingest->parsed()) return cmd_ingest(opts);
        if (analyze->parsed()) return cmd_trace(opts, false);
        if (map_cmd->parsed()) return cmd_trace(opts, true);
        if (extract->parsed()) return cmd_extract(opts);
        if (deriv->parsed()) return cmd_deriv(opts);
        if (eval_cmd->parsed()) return cmd_eval(opts);
        if (stats->parsed()) return cmd_stats(opts);
    } catch (const ParseError& e) {
        std::cerr << "lexrel: " << opts.config.entries_path << ": " << e.what()
                  << '\n';
        return 2;
    } catch (const RuleParseError& e) {
        std::cerr << "lexrel: rule file: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "lexrel: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lexrel: internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
