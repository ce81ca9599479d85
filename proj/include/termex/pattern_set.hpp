#ifndef TERMEX_PATTERN_SET_HPP
#define TERMEX_PATTERN_SET_HPP

#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "termex/parse_tree.hpp"

namespace termex {

// One leaf of a parsing pattern: a POS tag with an optional lexical anchor.
// An anchored leaf only matches words whose case-folded lemma equals the
// anchor (e.g. IN=of matches prepositions lemmatized as "of").
struct PatternLeaf {
    std::string tag;
    std::string lemma; // case-folded; empty = unanchored

    bool operator==(const PatternLeaf&) const = default;
};

// A bracketed head-marked POS pattern, e.g. "((NN NN<h>) NN<h>)" or
// "(NN<h> (IN=of NN))". The shape is a binary tree over leaf indices
// 0..n-1; patterns always have at least two leaves since single words are
// never pattern-parsed.
class ParsingPattern {
public:
    ParsingPattern(ParseTree shape, std::vector<PatternLeaf> leaves,
                   int content_word_count, int source_line);

    const ParseTree& shape() const { return shape_; }
    const std::vector<PatternLeaf>& leaves() const { return leaves_; }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }
    int content_word_count() const { return content_word_count_; }
    int source_line() const { return source_line_; }

    // Space-joined tag sequence, the index key ("JJ NN").
    std::string tag_key() const;

    // Full canonical form including anchors and head marks; two patterns are
    // duplicates iff their canonical forms are equal.
    std::string canonical() const;

private:
    ParseTree shape_;
    std::vector<PatternLeaf> leaves_;
    int content_word_count_ = 0;
    int source_line_ = 0;
};

class PatternSet {
public:
    PatternSet() = default;

    // One pattern per line, '#' comments and blank lines ignored. Rejects
    // unbalanced brackets, nodes without exactly one head mark, non-binary
    // nodes, single-leaf patterns, duplicates, and patterns with more
    // content words than `max_content_words` (0 = unlimited).
    static PatternSet parse(std::istream& in, const std::string& file_name);
    static PatternSet parse(std::istream& in, const std::string& file_name,
                            const std::set<std::string>& content_tags,
                            int max_content_words);

    static const std::set<std::string>& default_content_tags();

    const std::vector<ParsingPattern>& patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }
    int max_leaf_count() const { return max_leaf_count_; }

    // Ids of the patterns whose tag sequence equals `tag_key`, in file
    // order. Anchors still have to be checked against the actual words.
    std::span<const int> candidates(const std::string& tag_key) const;

private:
    std::vector<ParsingPattern> patterns_;
    std::unordered_map<std::string, std::vector<int>> by_tag_key_;
    int max_leaf_count_ = 0;
};

} // namespace termex

#endif
