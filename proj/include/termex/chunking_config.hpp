#ifndef TERMEX_CHUNKING_CONFIG_HPP
#define TERMEX_CHUNKING_CONFIG_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "termex/corpus.hpp"

namespace termex {

// A word occurring in a chunking directive. Matching is on the case-folded
// lemma by default so that sentence-initial capitalization does not defeat
// the rule; `surface` switches one rule to exact surface matching.
struct WordRule {
    std::string word; // case-folded unless surface_mode
    bool surface_mode = false;

    bool matches(const TaggedWord& w) const;
    bool operator==(const WordRule&) const = default;
};

// One element of a forbidden structure: a word and/or tag constraint.
// An empty string means "any". The word side matches the case-folded
// surface or lemma.
struct StructureToken {
    std::string word;
    std::string tag;

    bool matches(const TaggedWord& w) const;
};

// A tagged-word sequence that is syntactically valid but known not to be a
// term or part of one; any match is cut out of the surrounding chunk.
struct ForbiddenStructure {
    std::vector<StructureToken> tokens;
    int source_line = 0;
};

// The frontier rules that delimit Maximal Noun Phrases:
//  - frontier tags: POS tags not allowed inside an MNP,
//  - frontier words: words not allowed regardless of (or for a given) tag,
//  - frontier tag exceptions ("allow"): words permitted although their tag
//    is a frontier,
//  - allowed-tag word exceptions ("forbid"): words banned although their
//    tag is allowed,
//  - forbidden structures.
class ChunkingConfig {
public:
    ChunkingConfig() = default;

    // Line-oriented directives, '#' comments:
    //   frontier pos <TAG>
    //   frontier word <w> [pos <TAG>] [surface]
    //   allow word <w> pos <TAG> [surface]
    //   forbid word <w> pos <TAG> [surface]
    //   forbidden-structure <w1>/<T1> <w2>/<T2> ...   (either side may be *)
    // Throws ParseError on unknown directives, on "allow" naming a
    // non-frontier tag, and on a word that is simultaneously allowed and
    // forbidden for the same tag.
    static ChunkingConfig parse(std::istream& in, const std::string& file_name);

    // True when the word must not appear inside an MNP (protection aside).
    bool is_frontier(const TaggedWord& w) const;

    const std::set<std::string>& frontier_tags() const { return frontier_tags_; }
    const std::vector<ForbiddenStructure>& forbidden_structures() const {
        return forbidden_structures_;
    }
    std::size_t max_structure_length() const { return max_structure_length_; }

    // Mutators used by tests and programmatic configuration.
    void add_frontier_tag(const std::string& tag);
    void add_frontier_word(WordRule rule, const std::string& tag = "");
    void add_frontier_tag_exception(const std::string& tag, WordRule rule);
    void add_allowed_tag_word_exception(const std::string& tag, WordRule rule);
    void add_forbidden_structure(ForbiddenStructure structure);

private:
    std::set<std::string> frontier_tags_;
    std::vector<std::pair<WordRule, std::string>> frontier_words_; // tag "" = any
    std::map<std::string, std::vector<WordRule>> frontier_tag_exceptions_;
    std::map<std::string, std::vector<WordRule>> allowed_tag_word_exceptions_;
    std::vector<ForbiddenStructure> forbidden_structures_;
    std::size_t max_structure_length_ = 0;
};

} // namespace termex

#endif
