#ifndef TERMEX_CHUNKER_HPP
#define TERMEX_CHUNKER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "termex/chunking_config.hpp"
#include "termex/corpus.hpp"
#include "termex/terminology.hpp"

namespace termex {

// A sentence span matching a testified term. Protected spans are never
// split, truncated or treated as frontiers by the chunker, and their words
// may be tag/lemma corrected from the term.
struct ProtectedSpan {
    int sentence_id = 0;
    int start = 0; // inclusive word index
    int end = 0;   // exclusive word index
    int term_id = -1;

    bool operator==(const ProtectedSpan&) const = default;
};

// One Maximal Noun Phrase occurrence: a maximal frontier-free word run,
// with words as corrected at chunk time.
struct MnpOccurrence {
    int sentence_id = 0;
    int start = 0;
    int end = 0;
    std::vector<TaggedWord> words;
    std::vector<ProtectedSpan> protected_subspans;

    std::size_t length() const { return words.size(); }
};

// All occurrences of one MNP form, unified by case-folded surface key.
// The POS sequence comes from the first occurrence; occurrences whose tags
// diverge (tagger noise) still count under the type but set the flag.
struct MnpType {
    std::string inflected_key;
    std::string lemma_key;
    std::vector<std::string> pos_sequence;
    std::vector<MnpOccurrence> occurrences;
    bool pos_divergent = false;

    std::size_t frequency() const { return occurrences.size(); }
    std::size_t length() const { return pos_sequence.size(); }
    bool is_monolexical() const { return length() == 1; }
    const MnpOccurrence& first() const { return occurrences.front(); }
};

struct SentenceChunks {
    std::vector<MnpOccurrence> mnps;
    int corrected_words = 0;
};

// Every maximal match of a testified term, by surface key first and lemma
// key second. Overlaps are resolved longest-first then leftmost; the
// returned spans are disjoint and sorted by start.
std::vector<ProtectedSpan> locate_testified_occurrences(const Sentence& sentence,
                                                        const Terminology& terminology);

// Overwrites POS tags and lemmas inside each span with the term's, when the
// term provides them. `corrected_words` is incremented once per word whose
// tag or lemma changed.
Sentence apply_tag_corrections(const Sentence& sentence,
                               const std::vector<ProtectedSpan>& spans,
                               const Terminology& terminology,
                               int* corrected_words = nullptr);

// Splits a (corrected) sentence into MNPs: maximal runs of non-frontier
// words, where positions inside protected spans never count as frontiers,
// and any forbidden-structure match outside protected spans is cut out of
// its run.
std::vector<MnpOccurrence> chunk_sentence(const Sentence& sentence,
                                          const ChunkingConfig& config,
                                          const std::vector<ProtectedSpan>& spans);

// locate + correct + chunk for one sentence.
SentenceChunks chunk_sentence_with_resources(const Sentence& sentence,
                                             const ChunkingConfig& config,
                                             const Terminology& terminology);

// Whole-corpus chunking. Sentences are independent; `threads` > 1 (or 0 for
// the OpenMP default) runs them in parallel with output identical to the
// serial reference.
std::vector<SentenceChunks> chunk_corpus(const Corpus& corpus, const ChunkingConfig& config,
                                         const Terminology& terminology, int threads = 0);

// Serial reference implementation, kept for testing and benchmarking.
std::vector<SentenceChunks> chunk_corpus_serial(const Corpus& corpus,
                                                const ChunkingConfig& config,
                                                const Terminology& terminology);

// Groups occurrences into types by case-folded surface key; the result is
// sorted by inflected key and independent of chunking schedule.
std::vector<MnpType> collect_mnp_types(const std::vector<SentenceChunks>& chunks);

} // namespace termex

#endif
