#ifndef TERMEX_TERMINOLOGY_HPP
#define TERMEX_TERMINOLOGY_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "termex/parse_tree.hpp"

namespace termex {

// A term taken from an external terminological resource and trusted as
// valid. Tags, lemmas and the head-marked parse are optional; when present
// they align with the surface words.
struct TestifiedTerm {
    std::vector<std::string> surface_words;
    std::vector<std::string> pos_tags; // empty when not provided
    std::vector<std::string> lemmas;   // empty when not provided
    std::optional<ParseTree> parse;    // over word offsets 0..n-1
    std::string source;

    std::size_t length() const { return surface_words.size(); }
};

// A loaded term list with lookup indices on normalized surface and lemma
// keys. Keys are case-folded unless the terminology was loaded in
// case-sensitive mode. Immutable after loading; safe to share across
// threads.
class Terminology {
public:
    Terminology() = default;

    // One term per line, four TAB-separated fields:
    //   surface words, POS tags or "-", lemmas or "-", parse or "-"
    // e.g. "gene expression\tNN NN\tgene expression\t(0 1<h>)".
    // '#' comments and blank lines are ignored. Duplicate surface keys keep
    // the first entry.
    static Terminology parse(std::istream& in, const std::string& file_name,
                             const std::string& source_name, bool case_sensitive = false);

    // Union of the inputs; duplicates (identical surface key) keep the first
    // occurrence, so the argument order is significant. All inputs must
    // share the case-sensitivity mode.
    static Terminology merge(const std::vector<const Terminology*>& parts);

    bool case_sensitive() const { return case_sensitive_; }
    const std::vector<TestifiedTerm>& terms() const { return terms_; }
    const TestifiedTerm& term(int id) const { return terms_[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    std::size_t max_term_length() const { return max_term_length_; }

    // Builds a lookup key with the same normalization the indices use.
    std::string normalize_word(std::string_view word) const;
    std::string make_key(std::span<const std::string> words) const;

    // Term ids sharing the key, in load order; empty span when absent.
    std::span<const int> find_surface(const std::string& key) const;
    std::span<const int> find_lemma(const std::string& key) const;

private:
    void index_term(int id);

    std::vector<TestifiedTerm> terms_;
    std::unordered_map<std::string, std::vector<int>> surface_index_;
    std::unordered_map<std::string, std::vector<int>> lemma_index_;
    std::size_t max_term_length_ = 0;
    bool case_sensitive_ = false;
};

} // namespace termex

#endif
