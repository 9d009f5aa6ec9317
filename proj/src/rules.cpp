#include "lexrel/rules.hpp"

#include <algorithm>
#include <cctype>

namespace lexrel {

namespace {

struct Token {
    enum Kind { Ident, Quoted, LParen, RParen, Equals, Semi, Slash, End };
    Kind kind = End;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        if (pos_ >= text_.size()) return {Token::End, ""};
        char c = text_[pos_];
        switch (c) {
            case '(': ++pos_; return {Token::LParen, "("};
            case ')': ++pos_; return {Token::RParen, ")"};
            case '=': ++pos_; return {Token::Equals, "="};
            case ';': ++pos_; return {Token::Semi, ";"};
            case '/': ++pos_; return {Token::Slash, "/"};
            case '"': {
                ++pos_;
                std::string s;
                while (pos_ < text_.size() && text_[pos_] != '"')
                    s += text_[pos_++];
                if (pos_ >= text_.size())
                    throw RuleParseError("unterminated quoted lemma");
                ++pos_;
                return {Token::Quoted, s};
            }
            default: {
                std::string s;
                while (pos_ < text_.size() && !is_delim(text_[pos_]))
                    s += text_[pos_++];
                return {Token::Ident, s};
            }
        }
    }

    Token peek() {
        std::size_t saved = pos_;
        Token t = next();
        pos_ = saved;
        return t;
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    static bool is_delim(char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
               c == ')' || c == '=' || c == ';' || c == '/' || c == '"' ||
               c == '#';
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool valid_label(const std::string& label) {
    // &[A-Z]+-[A-Z0-9]+
    if (label.size() < 4 || label[0] != '&') return false;
    std::size_t dash = label.find('-');
    if (dash == std::string::npos || dash < 2 || dash + 1 >= label.size())
        return false;
    for (std::size_t i = 1; i < dash; ++i)
        if (!std::isupper(static_cast<unsigned char>(label[i]))) return false;
    for (std::size_t i = dash + 1; i < label.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(label[i]);
        if (!std::isupper(c) && !std::isdigit(c)) return false;
    }
    return true;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

class Parser {
public:
    Parser(std::string_view text, std::string source_id)
        : lex_(text) {
        ruleset_.source_id = std::move(source_id);
    }

    RuleSet run() {
        for (Token t = lex_.next(); t.kind != Token::End; t = lex_.next()) {
            if (t.kind == Token::Ident && t.text == "SET") {
                parse_set_decl();
            } else if (t.kind == Token::Ident && t.text == "MAP") {
                parse_map();
            } else {
                throw RuleParseError("expected SET or MAP, got '" + t.text +
                                     "'");
            }
        }
        return std::move(ruleset_);
    }

private:
    void expect(Token::Kind kind, const char* what) {
        Token t = lex_.next();
        if (t.kind != kind)
            throw RuleParseError(std::string("expected ") + what + ", got '" +
                                 t.text + "'");
        last_ = t;
    }

    void parse_set_decl() {
        Token name = lex_.next();
        if (name.kind != Token::Ident)
            throw RuleParseError("expected set name after SET");
        if (ruleset_.sets.count(name.text))
            throw RuleParseError("duplicate set name '" + name.text + "'");
        expect(Token::Equals, "'='");
        TagSet set = parse_set_body(Token::Semi);
        set.name = name.text;
        if (set.alternatives.empty())
            throw RuleParseError("empty set '" + name.text + "'");
        ruleset_.sets.emplace(name.text, std::move(set));
    }

    void parse_map() {
        std::size_t rule_index = ruleset_.rules.size();
        expect(Token::LParen, "'('");
        Token label = lex_.next();
        if (label.kind != Token::Ident || !valid_label(label.text))
            throw RuleParseError(rule_msg(rule_index, "bad map label '" +
                                                          label.text + "'"));
        expect(Token::RParen, "')'");
        Token kw = lex_.next();
        if (kw.kind != Token::Ident || kw.text != "TARGET")
            throw RuleParseError(rule_msg(rule_index, "expected TARGET"));

        MapRule rule;
        rule.label = label.text;
        rule.target = parse_set_units_until(
            [](const Token& t) {
                return t.kind == Token::Semi ||
                       (t.kind == Token::Ident && t.text == "IF");
            });
        if (rule.target.alternatives.empty())
            throw RuleParseError(rule_msg(rule_index, "empty target set"));

        Token t = lex_.next();
        if (t.kind == Token::Ident && t.text == "IF") {
            t = lex_.next();
            while (t.kind == Token::LParen) {
                rule.conditions.push_back(parse_condition(rule_index));
                t = lex_.next();
            }
            if (rule.conditions.empty())
                throw RuleParseError(rule_msg(rule_index, "IF without conditions"));
        }
        if (t.kind != Token::Semi)
            throw RuleParseError(rule_msg(rule_index, "expected ';'"));
        ruleset_.rules.push_back(std::move(rule));
    }

    Condition parse_condition(std::size_t rule_index) {
        Condition cond;
        Token t = lex_.next();
        if (t.kind == Token::Ident && t.text == "NOT") {
            cond.negated = true;
            t = lex_.next();
        }
        if (t.kind != Token::Ident || !is_integer(t.text))
            throw RuleParseError(
                rule_msg(rule_index, "expected condition offset"));
        cond.offset = std::stoi(t.text);
        if (cond.offset == 0)
            throw RuleParseError(
                rule_msg(rule_index, "condition offset 0 is forbidden"));
        cond.set = parse_set_body(Token::RParen);
        if (cond.set.alternatives.empty())
            throw RuleParseError(rule_msg(rule_index, "empty condition set"));
        return cond;
    }

    // Units until (and consuming) the closing token.
    TagSet parse_set_body(Token::Kind closing) {
        TagSet set;
        while (true) {
            Token t = lex_.peek();
            if (t.kind == closing) {
                lex_.next();
                return set;
            }
            if (t.kind == Token::End)
                throw RuleParseError("unexpected end of rule file");
            append_unit(set);
        }
    }

    // Units until a stop token, which is left unconsumed.
    template <typename Pred>
    TagSet parse_set_units_until(Pred stop) {
        TagSet set;
        while (true) {
            Token t = lex_.peek();
            if (t.kind == Token::End || stop(t)) return set;
            append_unit(set);
        }
    }

    // One union member: an atom, a declared-set reference, or a
    // parenthesized conjunction; '/' joins further members.
    void append_unit(TagSet& set) {
        Token t = lex_.next();
        if (t.kind == Token::LParen) {
            Alternative alt;
            for (Token a = lex_.next(); a.kind != Token::RParen;
                 a = lex_.next()) {
                if (a.kind == Token::Ident) {
                    alt.push_back(Atom{false, a.text});
                } else if (a.kind == Token::Quoted) {
                    alt.push_back(Atom{true, a.text});
                } else {
                    throw RuleParseError("bad atom in conjunction: '" +
                                         a.text + "'");
                }
            }
            if (alt.empty())
                throw RuleParseError("empty conjunction in set");
            set.alternatives.push_back(std::move(alt));
        } else if (t.kind == Token::Quoted) {
            set.alternatives.push_back({Atom{true, t.text}});
        } else if (t.kind == Token::Ident) {
            auto it = ruleset_.sets.find(t.text);
            if (it != ruleset_.sets.end()) {
                for (const auto& alt : it->second.alternatives)
                    set.alternatives.push_back(alt);
            } else {
                // A bare name that is not a declared set is a single tag.
                set.alternatives.push_back({Atom{false, t.text}});
            }
        } else {
            throw RuleParseError("unexpected token '" + t.text + "' in set");
        }
        if (lex_.peek().kind == Token::Slash) lex_.next();
    }

    std::string rule_msg(std::size_t index, const std::string& msg) {
        return "rule " + std::to_string(index) + ": " + msg;
    }

    Lexer lex_;
    Token last_;
    RuleSet ruleset_;
};

}  // namespace

RuleSet parse_rules(std::string_view text, std::string source_id) {
    return Parser(text, std::move(source_id)).run();
}

bool match_reading(const Reading& reading, const Alternative& alt) {
    return std::all_of(alt.begin(), alt.end(), [&](const Atom& atom) {
        return atom.is_lemma ? reading.lemma == atom.text
                             : reading.tags.contains(atom.text);
    });
}

bool match_set(const Reading& reading, const TagSet& set) {
    return std::any_of(set.alternatives.begin(), set.alternatives.end(),
                       [&](const Alternative& alt) {
                           return match_reading(reading, alt);
                       });
}

namespace {

bool cohort_matches(const Cohort& cohort, const TagSet& set) {
    return std::any_of(cohort.readings.begin(), cohort.readings.end(),
                       [&](const Reading& r) { return match_set(r, set); });
}

bool has_label(const Cohort& cohort) {
    return std::any_of(cohort.readings.begin(), cohort.readings.end(),
                       [](const Reading& r) { return r.map_label.has_value(); });
}

bool condition_holds(const std::vector<Cohort>& sentence, std::size_t i,
                     const Condition& cond) {
    long j = static_cast<long>(i) + cond.offset;
    bool found = j >= 0 && j < static_cast<long>(sentence.size()) &&
                 cohort_matches(sentence[static_cast<std::size_t>(j)],
                                cond.set);
    return cond.negated ? !found : found;
}

}  // namespace

std::vector<Cohort> apply_rules(std::vector<Cohort> sentence,
                                const RuleSet& rules) {
    for (const auto& rule : rules.rules) {
        for (std::size_t i = 0; i < sentence.size(); ++i) {
            Cohort& cohort = sentence[i];
            if (has_label(cohort)) continue;  // at most one label per cohort
            if (!cohort_matches(cohort, rule.target)) continue;
            bool fires = std::all_of(
                rule.conditions.begin(), rule.conditions.end(),
                [&](const Condition& c) {
                    return condition_holds(sentence, i, c);
                });
            if (!fires) continue;
            for (auto& reading : cohort.readings) {
                if (match_set(reading, rule.target))
                    reading.map_label = rule.label;
            }
        }
    }
    return sentence;
}

}  // namespace lexrel
