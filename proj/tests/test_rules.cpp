#include <doctest.h>

#include <random>
#include <sstream>

#include "lexrel/rules.hpp"

using namespace lexrel;

namespace {

Reading make_reading(std::string lemma, std::vector<std::string> tags) {
    return Reading{std::move(lemma), TagBag(std::move(tags)), {}};
}

std::vector<Cohort> gibelzorrotz_cohorts() {
    std::vector<Cohort> cohorts;
    cohorts.push_back(Cohort{
        "Udarearen",
        {make_reading("udare",
                      {"IZE", "ARR", "DEK", "GEN", "NUMS", "MUGM", "HAS_MAI"})},
        0});
    cohorts.push_back(Cohort{
        "antzeko",
        {make_reading("antzeko", {"ADJ", "IZL", "DEK", "ABS", "MG"})}, 1});
    cohorts.push_back(Cohort{
        "sagar", {make_reading("sagar", {"IZE", "ARR", "ZERO", "NOTGELGEN"})},
        2});
    cohorts.push_back(Cohort{
        "mota",
        {make_reading("mota", {"IZE", "ARR", "ZERO", "ABS", "NOTGELGEN"})},
        3});
    cohorts.push_back(
        Cohort{".", {make_reading(".", {"PUNT", "PUNT_PUNT"})}, 4});
    return cohorts;
}

const char* kMotaRules =
    "SET IZE-ZERO-NOTGELGEN = (IZE ZERO NOTGELGEN) ;\n"
    "SET MOTA = (\"mota\") ;\n"
    "MAP (&ERLT-MOTA) TARGET MOTA"
    " IF (-1 IZE-ZERO-NOTGELGEN) (1 PUNT/PKOMA/KOMA/DEF_BUKA) ;\n"
    "MAP (&ERLZ-MOTA10) TARGET IZE-ZERO-NOTGELGEN"
    " IF (1 MOTA) (2 PUNT/PKOMA/KOMA/DEF_BUKA) ;\n";

std::optional<std::string> cohort_label(const Cohort& cohort) {
    for (const auto& r : cohort.readings)
        if (r.map_label) return r.map_label;
    return std::nullopt;
}

}  // namespace

TEST_CASE("parse_rules accepts the relator rule pair") {
    auto rs = parse_rules(
        "MAP (&ERLT-MOTA) TARGET (\"mota\")"
        " IF (-1 IZE-ZERO-NOTGELGEN) (1 PUNT/PKOMA/KOMA/DEF_BUKA) ;");
    REQUIRE(rs.rules.size() == 1);
    CHECK(rs.rules[0].label == "&ERLT-MOTA");
    CHECK(rs.rules[0].conditions.size() == 2);
    CHECK(rs.rules[0].conditions[0].offset == -1);
    CHECK(rs.rules[0].conditions[1].offset == 1);
    CHECK(rs.rules[0].conditions[1].set.alternatives.size() == 4);

    auto rs2 = parse_rules(
        "MAP (&ERLZ-MOTA10) TARGET IZE-ZERO-NOTGELGEN"
        " IF (1 MOTA) (2 PUNT/PKOMA/KOMA/DEF_BUKA) ;");
    REQUIRE(rs2.rules.size() == 1);
    CHECK(rs2.rules[0].conditions.size() == 2);
}

TEST_CASE("empty text parses to an empty ruleset") {
    auto rs = parse_rules("");
    CHECK(rs.rules.empty());
    CHECK(rs.sets.empty());
}

TEST_CASE("declared sets are spliced into later rules") {
    auto rs = parse_rules(kMotaRules);
    REQUIRE(rs.rules.size() == 2);
    CHECK(rs.sets.count("MOTA") == 1);
    // target of the second rule resolves through the declared set
    CHECK(rs.rules[1].target.alternatives.size() == 1);
    CHECK(rs.rules[1].target.alternatives[0].size() == 3);
}

TEST_CASE("parse errors: duplicate set, zero offset, bad label") {
    CHECK_THROWS_AS(parse_rules("SET A = (X) ;\nSET A = (Y) ;"),
                    RuleParseError);
    CHECK_THROWS_AS(
        parse_rules("MAP (&ERLS-SYN) TARGET (IZE) IF (0 PUNT) ;"),
        RuleParseError);
    CHECK_THROWS_AS(parse_rules("MAP (badlabel) TARGET (IZE) ;"),
                    RuleParseError);
    CHECK_THROWS_AS(parse_rules("MAP (&ERLS-SYN) TARGET (IZE) IF"),
                    RuleParseError);
}

TEST_CASE("match_reading semantics") {
    auto reading = make_reading("mota", {"IZE", "ZERO", "NOTGELGEN"});
    Alternative lemma_alt{Atom{true, "mota"}};
    CHECK(match_reading(reading, lemma_alt));

    // conjunction == subset test
    Alternative conj{Atom{false, "IZE"}, Atom{false, "ZERO"},
                     Atom{false, "NOTGELGEN"}};
    CHECK(match_reading(reading, conj));
    bool subset = true;
    for (const auto& atom : conj)
        if (!reading.tags.contains(atom.text)) subset = false;
    CHECK(match_reading(reading, conj) == subset);

    Alternative gen{Atom{false, "GEN"}};
    CHECK(!match_reading(reading, gen));
}

TEST_CASE("apply_rules labels the worked relator example") {
    auto rs = parse_rules(kMotaRules);
    auto labeled = apply_rules(gibelzorrotz_cohorts(), rs);
    CHECK(!cohort_label(labeled[0]));
    CHECK(!cohort_label(labeled[1]));
    CHECK(cohort_label(labeled[2]) == "&ERLZ-MOTA10");
    CHECK(cohort_label(labeled[3]) == "&ERLT-MOTA");
    CHECK(!cohort_label(labeled[4]));
}

TEST_CASE("empty ruleset leaves the sentence untouched") {
    auto cohorts = gibelzorrotz_cohorts();
    auto out = apply_rules(cohorts, parse_rules(""));
    CHECK(out == cohorts);
}

TEST_CASE("out-of-bounds positive condition blocks the rule") {
    // oracle: manual evaluation of the firing predicate
    auto rs = parse_rules(
        "MAP (&ERLT-MOTA) TARGET (\"mota\") IF (1 PUNT) ;");
    std::vector<Cohort> truncated{
        Cohort{"mota",
               {make_reading("mota", {"IZE", "ZERO", "ABS", "NOTGELGEN"})},
               0}};
    auto out = apply_rules(truncated, rs);
    CHECK(!cohort_label(out[0]));
}

TEST_CASE("out-of-bounds offsets satisfy negated conditions") {
    auto rs = parse_rules(
        "MAP (&ERLS-SYN) TARGET (IZE) IF (NOT 1 PUNT) ;");
    std::vector<Cohort> single{
        Cohort{"mota", {make_reading("mota", {"IZE", "ZERO"})}, 0}};
    auto out = apply_rules(single, rs);
    CHECK(cohort_label(out[0]) == "&ERLS-SYN");
}

TEST_CASE("first rule wins and later rules skip labeled cohorts") {
    auto rs = parse_rules(
        "MAP (&ERLS-AAA) TARGET (IZE) ;\n"
        "MAP (&ERLG-BBB) TARGET (IZE) ;\n");
    std::vector<Cohort> single{
        Cohort{"mota", {make_reading("mota", {"IZE", "ZERO"})}, 0}};
    auto out = apply_rules(single, rs);
    CHECK(cohort_label(out[0]) == "&ERLS-AAA");
}

namespace {

std::vector<Cohort> random_sentence(std::mt19937& rng) {
    static const char* lemmas[] = {"mota", "sagar", "udare", "izen", "bete"};
    static const char* extras[] = {"ZERO", "NOTGELGEN", "GEN", "ABS", "MUGM",
                                   "DAT",  "DEK",       "INS", "MG"};
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_int_distribution<int> nreadings(1, 3);
    std::uniform_int_distribution<int> pick_lemma(0, 4);
    std::uniform_int_distribution<int> pick_extra(0, 8);
    std::uniform_int_distribution<int> nextras(0, 4);
    std::uniform_int_distribution<int> punct(0, 3);

    std::vector<Cohort> cohorts;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        Cohort cohort;
        cohort.index = static_cast<std::size_t>(i);
        if (punct(rng) == 0) {
            cohort.surface = ".";
            cohort.readings = {make_reading(".", {"PUNT", "PUNT_PUNT"})};
        } else {
            int m = nreadings(rng);
            for (int k = 0; k < m; ++k) {
                std::vector<std::string> tags{"IZE"};
                int e = nextras(rng);
                for (int j = 0; j < e; ++j)
                    tags.push_back(extras[pick_extra(rng)]);
                cohort.readings.push_back(
                    make_reading(lemmas[pick_lemma(rng)], std::move(tags)));
            }
            cohort.surface = cohort.readings[0].lemma;
        }
        cohorts.push_back(std::move(cohort));
    }
    return cohorts;
}

}  // namespace

TEST_CASE("property: idempotence and one label per cohort") {
    auto rs = parse_rules(
        "SET IZE-ZERO-NOTGELGEN = (IZE ZERO NOTGELGEN) ;\n"
        "SET DEF-END = PUNT/PKOMA/KOMA/DEF_BUKA ;\n"
        "MAP (&ERLT-MOTA) TARGET (\"mota\")"
        " IF (-1 IZE-ZERO-NOTGELGEN) (1 DEF-END) ;\n"
        "MAP (&ERLZ-MOTA10) TARGET IZE-ZERO-NOTGELGEN"
        " IF (1 (\"mota\")) (2 DEF-END) ;\n"
        "MAP (&ERLS-SYN) TARGET (IZE MUGM ABS) IF (1 DEF-END) ;\n"
        "MAP (&ERLG-GEN) TARGET IZE-ZERO-NOTGELGEN IF (1 DEF-END) ;\n");
    std::mt19937 rng(20260824);
    for (int i = 0; i < 1000; ++i) {
        auto sentence = random_sentence(rng);
        auto once = apply_rules(sentence, rs);
        auto twice = apply_rules(once, rs);
        CHECK(once == twice);
        for (std::size_t c = 0; c < once.size(); ++c) {
            // monotone: readings unchanged apart from labels
            REQUIRE(once[c].readings.size() == sentence[c].readings.size());
            std::size_t labels = 0;
            std::string label;
            for (std::size_t r = 0; r < once[c].readings.size(); ++r) {
                CHECK(once[c].readings[r].lemma ==
                      sentence[c].readings[r].lemma);
                CHECK(once[c].readings[r].tags ==
                      sentence[c].readings[r].tags);
                if (once[c].readings[r].map_label) {
                    if (labels == 0) label = *once[c].readings[r].map_label;
                    // a cohort carries at most one distinct label
                    CHECK(*once[c].readings[r].map_label == label);
                    ++labels;
                }
            }
        }
    }
}
