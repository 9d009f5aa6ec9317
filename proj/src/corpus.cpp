#include "lexrel/corpus.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace lexrel {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_punct_token(const std::string& t) {
    return t == "." || t == ";" || t == ",";
}

}  // namespace

ParsedEntries parse_entries(std::istream& in) {
    ParsedEntries result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        std::size_t p1 = line.find('|');
        std::size_t p2 = p1 == std::string::npos ? std::string::npos
                                                 : line.find('|', p1 + 1);
        std::size_t p3 = p2 == std::string::npos ? std::string::npos
                                                 : line.find('|', p2 + 1);
        if (p3 == std::string::npos)
            throw ParseError(lineno, "expected 4 pipe-separated fields");

        std::string headword = trim(line.substr(0, p1));
        std::string pos_field = trim(line.substr(p1 + 1, p2 - p1 - 1));
        std::string sense_field = trim(line.substr(p2 + 1, p3 - p2 - 1));
        std::string definition = trim(line.substr(p3 + 1));

        if (headword.empty()) throw ParseError(lineno, "empty headword");
        if (definition.empty()) throw ParseError(lineno, "empty definition");

        auto pos = parse_pos(pos_field);
        if (!pos) {
            result.diagnostics.push_back("line " + std::to_string(lineno) +
                                         ": unknown POS code '" + pos_field +
                                         "', record skipped");
            continue;
        }

        int number = 0;
        try {
            std::size_t idx = 0;
            number = std::stoi(sense_field, &idx);
            if (idx != sense_field.size()) number = 0;
        } catch (const std::exception&) {
            number = 0;
        }
        if (number < 1) throw ParseError(lineno, "sense number must be >= 1");

        // Consecutive records with the same headword and POS extend one entry.
        if (!result.entries.empty() &&
            result.entries.back().headword == headword &&
            result.entries.back().pos == *pos) {
            Entry& entry = result.entries.back();
            if (number != static_cast<int>(entry.senses.size()) + 1)
                throw ParseError(lineno, "sense numbers must be consecutive from 1");
            entry.senses.push_back(Sense{number, definition, {}});
        } else {
            if (number != 1)
                throw ParseError(lineno, "first sense of an entry must be 1");
            result.entries.push_back(
                Entry{headword, *pos, {Sense{number, definition, {}}}});
        }
    }
    return result;
}

std::string serialize_entries(const std::vector<Entry>& entries) {
    std::ostringstream out;
    for (const auto& entry : entries) {
        for (const auto& sense : entry.senses) {
            out << entry.headword << '|' << pos_code(entry.pos) << '|'
                << sense.number << '|' << sense.definition << '\n';
        }
    }
    return out.str();
}

std::vector<TokenizedSentence> tokenize(const Sense& sense,
                                        const std::string& headword) {
    std::vector<std::string> tokens;
    std::istringstream in(sense.definition);
    std::string word;
    while (in >> word) {
        // Peel trailing punctuation into separate tokens, innermost first.
        std::vector<std::string> tail;
        while (word.size() > 1 &&
               is_punct_token(std::string(1, word.back()))) {
            tail.insert(tail.begin(), std::string(1, word.back()));
            word.pop_back();
        }
        tokens.push_back(word);
        for (auto& t : tail) tokens.push_back(std::move(t));
    }

    SenseRef source{headword, sense.number};
    std::vector<TokenizedSentence> sentences;
    TokenizedSentence current{{}, source};
    for (auto& tok : tokens) {
        bool end = tok == ".";
        current.tokens.push_back(std::move(tok));
        if (end) {
            sentences.push_back(std::move(current));
            current = TokenizedSentence{{}, source};
        }
    }
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    return sentences;
}

}  // namespace lexrel
