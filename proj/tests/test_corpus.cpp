#include <doctest.h>

#include <random>
#include <sstream>

#include "lexrel/corpus.hpp"

using namespace lexrel;

TEST_CASE("parse_entries reads one record per line") {
    std::istringstream in(
        "gibelzorrotz|noun|1|Udarearen antzeko sagar mota.\n");
    auto parsed = parse_entries(in);
    REQUIRE(parsed.entries.size() == 1);
    const Entry& e = parsed.entries[0];
    CHECK(e.headword == "gibelzorrotz");
    CHECK(e.pos == Pos::Noun);
    REQUIRE(e.senses.size() == 1);
    CHECK(e.senses[0].number == 1);
    CHECK(e.senses[0].definition == "Udarearen antzeko sagar mota.");
    CHECK(parsed.diagnostics.empty());
}

TEST_CASE("parse_entries on an empty stream yields no entries") {
    std::istringstream in("");
    auto parsed = parse_entries(in);
    CHECK(parsed.entries.empty());
}

TEST_CASE("unknown POS code rejects the record but parsing continues") {
    std::istringstream in(
        "azkar|adverb|1|Bizkor.\n"
        "akabatu|verb|1|Bukatu.\n");
    auto parsed = parse_entries(in);
    REQUIRE(parsed.entries.size() == 1);
    CHECK(parsed.entries[0].headword == "akabatu");
    REQUIRE(parsed.diagnostics.size() == 1);
    CHECK(parsed.diagnostics[0].find("line 1") != std::string::npos);
}

TEST_CASE("malformed record raises a parse error with the line number") {
    std::istringstream in(
        "ok|noun|1|Zerbait.\n"
        "broken record without pipes\n");
    CHECK_THROWS_AS(parse_entries(in), ParseError);
    std::istringstream in2("x|noun|0|Zerbait.\n");
    CHECK_THROWS_AS(parse_entries(in2), ParseError);
    try {
        std::istringstream in3("a|noun|1|D.\nbad\n");
        parse_entries(in3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("consecutive records of one headword merge into one entry") {
    std::istringstream in(
        "mota|noun|1|Lehen adiera.\n"
        "mota|noun|2|Bigarren adiera.\n");
    auto parsed = parse_entries(in);
    REQUIRE(parsed.entries.size() == 1);
    REQUIRE(parsed.entries[0].senses.size() == 2);
    CHECK(parsed.entries[0].senses[1].number == 2);
}

TEST_CASE("comment lines and blank lines are skipped") {
    std::istringstream in("# header\n\nmota|noun|1|Zerbait.\n");
    auto parsed = parse_entries(in);
    CHECK(parsed.entries.size() == 1);
}

TEST_CASE("tokenize splits terminal punctuation into its own token") {
    Sense s{1, "Udarearen antzeko sagar mota.", {}};
    auto sentences = tokenize(s, "gibelzorrotz");
    REQUIRE(sentences.size() == 1);
    CHECK(sentences[0].tokens ==
          std::vector<std::string>{"Udarearen", "antzeko", "sagar", "mota",
                                   "."});
    CHECK(sentences[0].source == SenseRef{"gibelzorrotz", 1});
}

TEST_CASE("tokenize keeps a bare word intact") {
    Sense s{1, "Bukatu", {}};
    auto sentences = tokenize(s, "akabatu");
    REQUIRE(sentences.size() == 1);
    CHECK(sentences[0].tokens == std::vector<std::string>{"Bukatu"});
}

TEST_CASE("commas split like terminal punctuation") {
    // oracle: hand tokenization
    Sense s{1, "a, b.", {}};
    auto sentences = tokenize(s, "x");
    REQUIRE(sentences.size() == 1);
    CHECK(sentences[0].tokens == std::vector<std::string>{"a", ",", "b", "."});
}

TEST_CASE("multi-sentence definitions split at the full stop") {
    Sense s{1, "Lehen esaldia. Bigarren esaldia.", {}};
    auto sentences = tokenize(s, "x");
    REQUIRE(sentences.size() == 2);
    CHECK(sentences[0].tokens ==
          std::vector<std::string>{"Lehen", "esaldia", "."});
    CHECK(sentences[1].tokens ==
          std::vector<std::string>{"Bigarren", "esaldia", "."});
    CHECK(sentences[1].source == sentences[0].source);
}

namespace {

std::string random_word(std::mt19937& rng) {
    static const char alphabet[] = "abcdefgz";
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<int> pick(0, 7);
    std::string w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w += alphabet[pick(rng)];
    return w;
}

std::string random_definition(std::mt19937& rng) {
    std::uniform_int_distribution<int> words(1, 8);
    std::uniform_int_distribution<int> punct(0, 9);
    std::string def;
    int n = words(rng);
    for (int i = 0; i < n; ++i) {
        if (!def.empty()) def += ' ';
        def += random_word(rng);
        int p = punct(rng);
        if (i + 1 < n && p == 0) def += ',';
        if (i + 1 < n && p == 1) def += ';';
    }
    def += '.';
    return def;
}

std::string reconstruct(const std::vector<TokenizedSentence>& sentences) {
    std::string out;
    for (const auto& sentence : sentences) {
        for (const auto& tok : sentence.tokens) {
            bool punct = tok == "." || tok == ";" || tok == ",";
            if (!out.empty() && !punct) out += ' ';
            out += tok;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("property: token concatenation reproduces the definition") {
    std::mt19937 rng(20260824);
    for (int i = 0; i < 500; ++i) {
        std::string def = random_definition(rng);
        Sense s{1, def, {}};
        auto sentences = tokenize(s, "w");
        REQUIRE(!sentences.empty());
        for (const auto& sentence : sentences)
            CHECK(!sentence.tokens.empty());
        CHECK(reconstruct(sentences) == def);
    }
}

TEST_CASE("property: serialize/parse round-trip preserves entries") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> n_entries(0, 10);
    std::uniform_int_distribution<int> n_senses(1, 3);
    std::uniform_int_distribution<int> pick_pos(0, 2);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Entry> entries;
        int n = n_entries(rng);
        for (int i = 0; i < n; ++i) {
            Entry e;
            e.headword = random_word(rng) + std::to_string(i);
            e.pos = static_cast<Pos>(pick_pos(rng));
            int m = n_senses(rng);
            for (int k = 1; k <= m; ++k)
                e.senses.push_back(Sense{k, random_definition(rng), {}});
            entries.push_back(std::move(e));
        }
        std::istringstream in(serialize_entries(entries));
        auto parsed = parse_entries(in);
        CHECK(parsed.diagnostics.empty());
        CHECK(parsed.entries == entries);
    }
}
