#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexrel/tags.hpp"

namespace lexrel {

struct Sense {
    int number = 0;
    std::string definition;
    std::vector<std::string> examples;

    bool operator==(const Sense&) const = default;
};

struct Entry {
    std::string headword;
    Pos pos = Pos::Noun;
    std::vector<Sense> senses;

    bool operator==(const Entry&) const = default;
};

struct SenseRef {
    std::string headword;
    int sense_number = 0;

    bool operator==(const SenseRef&) const = default;
    auto operator<=>(const SenseRef&) const = default;
};

struct TokenizedSentence {
    std::vector<std::string> tokens;
    SenseRef source;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParsedEntries {
    std::vector<Entry> entries;
    // One message per rejected record (unknown POS code); parsing continues.
    std::vector<std::string> diagnostics;
};

// Pipe-delimited interchange: headword|pos|sense#|definition, '#' comments.
ParsedEntries parse_entries(std::istream& in);
std::string serialize_entries(const std::vector<Entry>& entries);

// Splits the definition at '.' into sentences; '.', ';' and ',' become
// their own tokens.
std::vector<TokenizedSentence> tokenize(const Sense& sense,
                                        const std::string& headword);

}  // namespace lexrel
