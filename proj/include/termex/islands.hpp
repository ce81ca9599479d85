#ifndef TERMEX_ISLANDS_HPP
#define TERMEX_ISLANDS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "termex/chunker.hpp"
#include "termex/parse_tree.hpp"
#include "termex/pattern_set.hpp"
#include "termex/terminology.hpp"

namespace termex {

// One element of a (possibly reduced) MNP word sequence.
struct SeqItem {
    int position = 0;    // original word position within the MNP
    std::string surface; // normalized (case-folded unless case-sensitive mode)
    std::string lemma;   // normalized
    std::string tag;
};

enum class IslandOrigin { Testified, Endogenous };

// An island of reliability: a known shorter term (testified, or parsed
// earlier in this run) with a known internal parse. Matching a subsequence
// of an MNP against it lets the parser reduce that subsequence to the
// island's head word.
struct IslandEntry {
    std::vector<std::string> surface_words; // normalized key
    std::vector<std::string> lemma_words;   // normalized; empty when unknown
    int head_offset = 0;                    // index into surface_words
    ParseTree tree;                         // over offsets 0..k-1
    IslandOrigin origin = IslandOrigin::Endogenous;
    int term_id = -1; // TestifiedTerm id when origin == Testified
};

// Positions (indices into the queried item sequence, strictly increasing)
// whose surface or lemma sequence equals an island key.
struct IslandMatch {
    std::vector<int> items;
    int entry_id = -1;
};

struct IslandOptions {
    bool noncontiguous = false; // allow order-preserving gapped matches
    int gap_limit = 1;          // max total skipped words inside a match
};

// The simplified sequence after an island reduction: matched items are gone
// except the island head, which stays in place and will expand back to the
// island's tree.
struct Reduction {
    std::vector<SeqItem> items;
    std::map<int, ParseTree> substitutions; // head position -> tree over positions
    int entry_id = -1;
};

class IslandIndex {
public:
    explicit IslandIndex(bool case_sensitive = false) : case_sensitive_(case_sensitive) {}

    // Every multi-word testified term that has a parse, or whose tags can be
    // pattern-parsed, becomes an island. Single-word terms are skipped:
    // reducing one word to itself achieves nothing.
    static IslandIndex from_terminology(const Terminology& terminology,
                                        const PatternSet& patterns);

    // First entry per key wins, on both the surface and the lemma key.
    void add(IslandEntry entry);

    // Adds the parse tree of an MNP type and every internal subtree of it as
    // endogenous islands, keyed by the covered words of the type's first
    // occurrence.
    void harvest(const MnpType& type, const ParseTree& tree);

    std::size_t size() const { return entries_.size(); }
    const IslandEntry& entry(int id) const { return entries_[static_cast<std::size_t>(id)]; }
    std::size_t max_key_length() const { return max_key_length_; }
    bool case_sensitive() const { return case_sensitive_; }

    // All maximal matches within the item sequence, strictly shorter than
    // the sequence, surface key first then lemma key. Sorted longest-first,
    // then leftmost. Non-contiguous (order-preserving, bounded-gap) matches
    // are included only when enabled.
    std::vector<IslandMatch> find(const std::vector<SeqItem>& items,
                                  const IslandOptions& options) const;

    std::string normalize_word(std::string_view word) const;

private:
    std::vector<IslandEntry> entries_;
    std::unordered_map<std::string, int> by_surface_;
    std::unordered_map<std::string, int> by_lemma_;
    std::size_t max_key_length_ = 0;
    bool case_sensitive_ = false;
};

// Item sequence of a type's first occurrence, normalized for term and
// island matching.
std::vector<SeqItem> make_seq_items(const MnpType& type, bool case_sensitive);

Reduction reduce_by_island(const std::vector<SeqItem>& items, const IslandMatch& match,
                           const IslandIndex& index);

// Replaces each substituted leaf of the simplified tree by the island's
// internal tree; head marks are preserved. A substitution that names a
// non-leaf position throws std::logic_error.
ParseTree expand_parse(const ParseTree& simplified,
                       const std::map<int, ParseTree>& substitutions);

} // namespace termex

#endif
