#pragma once

#include "xmodlink/group.hpp"

#include <string>
#include <vector>

namespace xmodlink {

// One letter of an enhanced boundary word: an element, plain or starred.
struct WordEntry {
    int index = 0;
    bool starred = false;

    friend bool operator==(const WordEntry&, const WordEntry&) = default;
    friend auto operator<=>(const WordEntry&, const WordEntry&) = default;
};

// A word in the symbols g and g* over a single group.
struct EnhancedWord {
    GroupPtr group;
    std::vector<WordEntry> entries;

    friend bool operator==(const EnhancedWord& a, const EnhancedWord& b) {
        return same_group(a.group, b.group) && a.entries == b.entries;
    }
};

// Left-to-right product, starred entries inverted; the empty word gives 1.
GroupElement evaluate_word(const EnhancedWord& w);

// Reverses the word and flips every star.
EnhancedWord reverse_star(const EnhancedWord& w);

// Word syntax: comma-separated element names, '*' suffix for starred entries.
// An empty or all-whitespace string is the empty word.
EnhancedWord parse_word(const GroupPtr& g, const std::string& text);
std::string word_to_string(const EnhancedWord& w);

} // namespace xmodlink
