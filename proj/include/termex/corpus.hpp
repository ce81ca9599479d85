#ifndef TERMEX_CORPUS_HPP
#define TERMEX_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace termex {

// One token of a tagged, lemmatized corpus. Tokenization, sentence
// splitting, tagging and lemmatization happen upstream; this layer only
// reads their output.
struct TaggedWord {
    std::string surface;
    std::string pos;
    std::string lemma;
    int index = 0; // 0-based position in the sentence

    bool operator==(const TaggedWord&) const = default;
};

struct Sentence {
    std::vector<TaggedWord> words;
    int id = 0; // 0-based position in the corpus

    bool operator==(const Sentence&) const = default;
};

struct Corpus {
    std::vector<Sentence> sentences;
    std::size_t word_count = 0;

    std::size_t sentence_count() const { return sentences.size(); }

    bool operator==(const Corpus&) const = default;
};

struct TagSet {
    std::string name;
    std::set<std::string> tags;
};

struct TagCount {
    std::string tag;
    std::size_t count = 0;

    bool operator==(const TagCount&) const = default;
};

// Tags seen in the corpus but missing from the tag set, sorted by tag.
// Unknown tags are reported, never fatal: tag sets are user configuration.
struct ValidationReport {
    std::vector<TagCount> unknown_tags;

    bool ok() const { return unknown_tags.empty(); }
};

// Vertical token format: one `surface<TAB>pos<TAB>lemma` line per token, a
// blank line ends a sentence, lines starting with `#` are comments. A
// trailing sentence without a final blank line is accepted; consecutive
// blank lines do not create empty sentences. Throws ParseError with the
// offending line number on malformed lines and on an empty corpus.
Corpus parse_vertical_corpus(std::istream& in, const std::string& file_name);
Corpus parse_vertical_corpus_text(std::string_view text, const std::string& file_name);

// Canonical serialization of the same format: every sentence is followed by
// one blank line. parse(serialize(c)) is structurally identical to c.
// Tokens that cannot survive the round trip (empty, containing whitespace,
// or starting with '#') are rejected with std::invalid_argument.
void serialize_corpus(const Corpus& corpus, std::ostream& out);
std::string serialize_corpus(const Corpus& corpus);

ValidationReport validate_tagset(const Corpus& corpus, const TagSet& tagset);

// The Penn TreeBank tagset (word-level tags plus punctuation tags).
const TagSet& penn_treebank_tagset();

} // namespace termex

#endif
