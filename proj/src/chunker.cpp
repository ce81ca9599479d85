#include "termex/chunker.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "termex/text_util.hpp"

namespace termex {

namespace {

struct SpanCandidate {
    int start;
    int length;
    int term_id;
};

} // namespace

std::vector<ProtectedSpan> locate_testified_occurrences(const Sentence& sentence,
                                                        const Terminology& terminology) {
    std::vector<ProtectedSpan> spans;
    if (terminology.empty()) return spans;

    const int n = static_cast<int>(sentence.words.size());
    const int max_len = static_cast<int>(
        std::min<std::size_t>(terminology.max_term_length(), sentence.words.size()));

    const bool exact = terminology.case_sensitive();
    auto append_normalized = [exact](std::string& key, const std::string& word) {
        for (char c : word)
            key += (!exact && c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    };

    std::vector<SpanCandidate> candidates;
    std::string surface_key;
    std::string lemma_key;
    for (int start = 0; start < n; ++start) {
        surface_key.clear();
        lemma_key.clear();
        for (int len = 1; len <= max_len && start + len <= n; ++len) {
            const TaggedWord& w = sentence.words[static_cast<std::size_t>(start + len - 1)];
            if (len > 1) {
                surface_key += ' ';
                lemma_key += ' ';
            }
            append_normalized(surface_key, w.surface);
            append_normalized(lemma_key, w.lemma);

            std::span<const int> ids = terminology.find_surface(surface_key);
            if (ids.empty()) ids = terminology.find_lemma(lemma_key);
            if (!ids.empty()) candidates.push_back(SpanCandidate{start, len, ids.front()});
        }
    }

    // Longest first, then leftmost; greedy selection keeps spans disjoint.
    std::sort(candidates.begin(), candidates.end(),
              [](const SpanCandidate& a, const SpanCandidate& b) {
                  if (a.length != b.length) return a.length > b.length;
                  if (a.start != b.start) return a.start < b.start;
                  return a.term_id < b.term_id;
              });
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    for (const SpanCandidate& c : candidates) {
        bool free = true;
        for (int i = c.start; i < c.start + c.length; ++i)
            if (taken[static_cast<std::size_t>(i)]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (int i = c.start; i < c.start + c.length; ++i)
            taken[static_cast<std::size_t>(i)] = true;
        spans.push_back(ProtectedSpan{sentence.id, c.start, c.start + c.length, c.term_id});
    }
    std::sort(spans.begin(), spans.end(),
              [](const ProtectedSpan& a, const ProtectedSpan& b) { return a.start < b.start; });
    return spans;
}

Sentence apply_tag_corrections(const Sentence& sentence,
                               const std::vector<ProtectedSpan>& spans,
                               const Terminology& terminology, int* corrected_words) {
    Sentence out = sentence;
    for (const ProtectedSpan& span : spans) {
        const TestifiedTerm& term = terminology.term(span.term_id);
        for (int i = span.start; i < span.end; ++i) {
            TaggedWord& word = out.words[static_cast<std::size_t>(i)];
            std::size_t k = static_cast<std::size_t>(i - span.start);
            bool changed = false;
            if (!term.pos_tags.empty() && word.pos != term.pos_tags[k]) {
                word.pos = term.pos_tags[k];
                changed = true;
            }
            if (!term.lemmas.empty() && word.lemma != term.lemmas[k]) {
                word.lemma = term.lemmas[k];
                changed = true;
            }
            if (changed && corrected_words) ++*corrected_words;
        }
    }
    return out;
}

namespace {

bool overlaps_any_span(const std::vector<ProtectedSpan>& spans, int start, int end) {
    for (const ProtectedSpan& span : spans)
        if (span.start < end && start < span.end) return true;
    return false;
}

// Longest forbidden-structure match starting at `at` and contained in
// [at, run_end), skipping matches that touch a protected span. Returns the
// match length, 0 if none.
int forbidden_match_at(const Sentence& sentence, const ChunkingConfig& config,
                       const std::vector<ProtectedSpan>& spans, int at, int run_end) {
    int best = 0;
    for (const ForbiddenStructure& structure : config.forbidden_structures()) {
        int len = static_cast<int>(structure.tokens.size());
        if (len <= best || at + len > run_end) continue;
        bool matched = true;
        for (int k = 0; k < len; ++k)
            if (!structure.tokens[static_cast<std::size_t>(k)].matches(
                    sentence.words[static_cast<std::size_t>(at + k)])) {
                matched = false;
                break;
            }
        if (matched && !overlaps_any_span(spans, at, at + len)) best = len;
    }
    return best;
}

} // namespace

std::vector<MnpOccurrence> chunk_sentence(const Sentence& sentence,
                                          const ChunkingConfig& config,
                                          const std::vector<ProtectedSpan>& spans) {
    const int n = static_cast<int>(sentence.words.size());
    std::vector<bool> protected_pos(static_cast<std::size_t>(n), false);
    for (const ProtectedSpan& span : spans)
        for (int i = span.start; i < span.end; ++i)
            protected_pos[static_cast<std::size_t>(i)] = true;

    // keep[i]: word i survives into some MNP.
    std::vector<bool> keep(static_cast<std::size_t>(n), false);
    int i = 0;
    while (i < n) {
        bool frontier = !protected_pos[static_cast<std::size_t>(i)] &&
                        config.is_frontier(sentence.words[static_cast<std::size_t>(i)]);
        if (frontier) {
            ++i;
            continue;
        }
        int run_start = i;
        int run_end = i;
        while (run_end < n) {
            bool f = !protected_pos[static_cast<std::size_t>(run_end)] &&
                     config.is_frontier(sentence.words[static_cast<std::size_t>(run_end)]);
            if (f) break;
            ++run_end;
        }
        // Cut forbidden-structure matches out of the run (protection wins).
        int j = run_start;
        while (j < run_end) {
            int len = forbidden_match_at(sentence, config, spans, j, run_end);
            if (len > 0) {
                j += len; // matched words stay excluded
            } else {
                keep[static_cast<std::size_t>(j)] = true;
                ++j;
            }
        }
        i = run_end;
    }

    std::vector<MnpOccurrence> mnps;
    i = 0;
    while (i < n) {
        if (!keep[static_cast<std::size_t>(i)]) {
            ++i;
            continue;
        }
        int start = i;
        while (i < n && keep[static_cast<std::size_t>(i)]) ++i;
        MnpOccurrence mnp;
        mnp.sentence_id = sentence.id;
        mnp.start = start;
        mnp.end = i;
        mnp.words.assign(sentence.words.begin() + start, sentence.words.begin() + i);
        for (const ProtectedSpan& span : spans)
            if (span.start >= start && span.end <= i) mnp.protected_subspans.push_back(span);
        mnps.push_back(std::move(mnp));
    }
    return mnps;
}

SentenceChunks chunk_sentence_with_resources(const Sentence& sentence,
                                             const ChunkingConfig& config,
                                             const Terminology& terminology) {
    SentenceChunks out;
    std::vector<ProtectedSpan> spans = locate_testified_occurrences(sentence, terminology);
    if (spans.empty()) {
        out.mnps = chunk_sentence(sentence, config, spans);
        return out;
    }
    Sentence corrected = apply_tag_corrections(sentence, spans, terminology,
                                               &out.corrected_words);
    out.mnps = chunk_sentence(corrected, config, spans);
    return out;
}

std::vector<SentenceChunks> chunk_corpus_serial(const Corpus& corpus,
                                                const ChunkingConfig& config,
                                                const Terminology& terminology) {
    std::vector<SentenceChunks> out(corpus.sentences.size());
    for (std::size_t s = 0; s < corpus.sentences.size(); ++s)
        out[s] = chunk_sentence_with_resources(corpus.sentences[s], config, terminology);
    return out;
}

std::vector<SentenceChunks> chunk_corpus(const Corpus& corpus, const ChunkingConfig& config,
                                         const Terminology& terminology, int threads) {
#ifdef _OPENMP
    if (threads == 1) return chunk_corpus_serial(corpus, config, terminology);
    std::vector<SentenceChunks> out(corpus.sentences.size());
    const int count = static_cast<int>(corpus.sentences.size());
    if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int s = 0; s < count; ++s)
        out[static_cast<std::size_t>(s)] = chunk_sentence_with_resources(
            corpus.sentences[static_cast<std::size_t>(s)], config, terminology);
    return out;
#else
    (void)threads;
    return chunk_corpus_serial(corpus, config, terminology);
#endif
}

std::vector<MnpType> collect_mnp_types(const std::vector<SentenceChunks>& chunks) {
    std::vector<MnpType> types;
    std::unordered_map<std::string, std::size_t> by_key;

    for (const SentenceChunks& sentence : chunks) {
        for (const MnpOccurrence& mnp : sentence.mnps) {
            std::string key;
            for (std::size_t i = 0; i < mnp.words.size(); ++i) {
                if (i > 0) key += ' ';
                key += fold_case(mnp.words[i].surface);
            }
            auto [it, inserted] = by_key.emplace(key, types.size());
            if (inserted) {
                MnpType type;
                type.inflected_key = key;
                std::string lemma_key;
                for (std::size_t i = 0; i < mnp.words.size(); ++i) {
                    if (i > 0) lemma_key += ' ';
                    lemma_key += fold_case(mnp.words[i].lemma);
                    type.pos_sequence.push_back(mnp.words[i].pos);
                }
                type.lemma_key = std::move(lemma_key);
                types.push_back(std::move(type));
            }
            MnpType& type = types[it->second];
            if (!type.pos_divergent && type.pos_sequence.size() == mnp.words.size()) {
                for (std::size_t i = 0; i < mnp.words.size(); ++i)
                    if (type.pos_sequence[i] != mnp.words[i].pos) {
                        type.pos_divergent = true;
                        break;
                    }
            }
            type.occurrences.push_back(mnp);
        }
    }

    std::sort(types.begin(), types.end(), [](const MnpType& a, const MnpType& b) {
        return a.inflected_key < b.inflected_key;
    });
    return types;
}

} // namespace termex
