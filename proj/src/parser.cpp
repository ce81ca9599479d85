#include "termex/parser.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "termex/text_util.hpp"

namespace termex {

const char* method_name(ParseMethod method) {
    switch (method) {
    case ParseMethod::TtCovered: return "tt-covered";
    case ParseMethod::PatternCovered: return "pattern-covered";
    case ParseMethod::Progressive: return "progressive";
    }
    return "?";
}

std::vector<ParseTree> match_pattern(const std::vector<SeqItem>& seq,
                                     const PatternSet& patterns) {
    std::vector<ParseTree> out;
    if (seq.size() < 2) return out;
    std::string key;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) key += ' ';
        key += seq[i].tag;
    }
    for (int id : patterns.candidates(key)) {
        const ParsingPattern& pattern = patterns.patterns()[static_cast<std::size_t>(id)];
        bool ok = true;
        for (std::size_t i = 0; ok && i < seq.size(); ++i) {
            const PatternLeaf& leaf = pattern.leaves()[i];
            if (!leaf.lemma.empty() && fold_case(seq[i].lemma) != leaf.lemma) ok = false;
        }
        if (ok) out.push_back(pattern.shape());
    }
    return out;
}

namespace {

ParseTree to_positions(const ParseTree& tree, const std::vector<SeqItem>& seq) {
    return tree.relabel(
        [&](int i) { return seq[static_cast<std::size_t>(i)].position; });
}

void push_unique(std::vector<ParseResult>& results, ParseResult result) {
    for (const ParseResult& r : results)
        if (r.tree == result.tree) return;
    results.push_back(std::move(result));
}

int lookup_term(const Terminology& terminology, const std::vector<SeqItem>& items,
                int start, int length) {
    std::string surface_key;
    std::string lemma_key;
    for (int i = start; i < start + length; ++i) {
        const SeqItem& item = items[static_cast<std::size_t>(i)];
        if (i > start) {
            surface_key += ' ';
            lemma_key += ' ';
        }
        surface_key += item.surface;
        lemma_key += item.lemma;
    }
    std::span<const int> ids = terminology.find_surface(surface_key);
    if (ids.empty()) ids = terminology.find_lemma(lemma_key);
    return ids.empty() ? -1 : ids.front();
}

struct Segment {
    int start = 0;
    int length = 0;
    int term_id = -1;
};

// Head-marked tree for one covering segment: the term's own parse when it
// has one, otherwise the first pattern parse of the segment's tags.
std::optional<ParseTree> segment_tree(const std::vector<SeqItem>& items, const Segment& seg,
                                      const Terminology& terminology,
                                      const PatternSet& patterns) {
    if (seg.length == 1)
        return ParseTree::leaf(items[static_cast<std::size_t>(seg.start)].position);
    const TestifiedTerm& term = terminology.term(seg.term_id);
    if (term.parse)
        return term.parse->relabel([&](int offset) {
            return items[static_cast<std::size_t>(seg.start + offset)].position;
        });
    std::vector<SeqItem> sub(items.begin() + seg.start,
                             items.begin() + seg.start + seg.length);
    std::vector<ParseTree> trees = match_pattern(sub, patterns);
    if (trees.empty()) return std::nullopt;
    return to_positions(trees.front(), sub);
}

// Reduces every segment to its head word, pattern-parses the head sequence
// and expands the segment trees back in.
bool parse_decomposition(const std::vector<SeqItem>& items,
                         const std::vector<Segment>& segments,
                         const Terminology& terminology, const PatternSet& patterns,
                         const ParserOptions& options,
                         std::vector<ParseResult>& results) {
    std::vector<SeqItem> head_items;
    std::map<int, ParseTree> substitutions;
    std::vector<int> term_ids;
    for (const Segment& seg : segments) {
        std::optional<ParseTree> tree = segment_tree(items, seg, terminology, patterns);
        if (!tree) return false;
        term_ids.push_back(seg.term_id);
        int head_position = tree->head_leaf();
        head_items.push_back(items[static_cast<std::size_t>(head_position)]);
        if (seg.length > 1) substitutions[head_position] = std::move(*tree);
    }
    std::vector<ParseTree> trees = match_pattern(head_items, patterns);
    bool any = false;
    for (const ParseTree& tree : trees) {
        ParseTree simplified = to_positions(tree, head_items);
        ParseResult result;
        result.tree = expand_parse(simplified, substitutions);
        result.method = ParseMethod::TtCovered;
        result.reliability = reliability_score(ParseMethod::TtCovered);
        result.terms_used = term_ids;
        push_unique(results, std::move(result));
        any = true;
        if (!options.non_deterministic) break;
    }
    return any;
}

} // namespace

std::optional<std::vector<ParseResult>> parse_tt_covered(const MnpType& type,
                                                         const Terminology& terminology,
                                                         const PatternSet& patterns,
                                                         const ParserOptions& options) {
    if (type.length() < 2 || terminology.empty()) return std::nullopt;
    std::vector<SeqItem> items = make_seq_items(type, terminology.case_sensitive());
    const int n = static_cast<int>(items.size());
    std::vector<ParseResult> results;

    // (a) the MNP is a single testified term
    int whole = lookup_term(terminology, items, 0, n);
    if (whole >= 0) {
        const TestifiedTerm& term = terminology.term(whole);
        if (term.parse) {
            ParseResult result;
            result.tree = term.parse->relabel([&](int offset) {
                return items[static_cast<std::size_t>(offset)].position;
            });
            result.method = ParseMethod::TtCovered;
            result.reliability = reliability_score(ParseMethod::TtCovered);
            result.terms_used.push_back(whole);
            results.push_back(std::move(result));
            return results;
        }
        for (const ParseTree& tree : match_pattern(items, patterns)) {
            ParseResult result;
            result.tree = to_positions(tree, items);
            result.method = ParseMethod::TtCovered;
            result.reliability = reliability_score(ParseMethod::TtCovered);
            result.terms_used.push_back(whole);
            push_unique(results, std::move(result));
            if (!options.non_deterministic) break;
        }
        if (!results.empty()) return results;
        // the whole-MNP term gave no parse; a combination of shorter terms
        // may still cover it
    }

    // (b) the MNP is exactly a concatenation of two or more testified terms
    const int max_seg =
        static_cast<int>(std::min<std::size_t>(terminology.max_term_length(),
                                               static_cast<std::size_t>(n)));
    // coverable[p]: positions [p, n) can be tiled with testified terms
    std::vector<char> coverable(static_cast<std::size_t>(n) + 1, 0);
    coverable[static_cast<std::size_t>(n)] = 1;
    for (int p = n - 1; p >= 0; --p)
        for (int len = 1; len <= max_seg && p + len <= n; ++len)
            if (coverable[static_cast<std::size_t>(p + len)] &&
                lookup_term(terminology, items, p, len) >= 0) {
                coverable[static_cast<std::size_t>(p)] = 1;
                break;
            }
    if (!coverable[0]) return std::nullopt;

    std::vector<Segment> segments;
    std::function<bool(int)> descend = [&](int p) -> bool {
        for (int len = std::min(max_seg, n - p); len >= 1; --len) {
            if (p == 0 && len == n) continue; // case (a) handled above
            if (!coverable[static_cast<std::size_t>(p + len)]) continue;
            int term_id = lookup_term(terminology, items, p, len);
            if (term_id < 0) continue;
            segments.push_back(Segment{p, len, term_id});
            if (p + len == n) {
                if (segments.size() >= 2 &&
                    parse_decomposition(items, segments, terminology, patterns, options,
                                        results)) {
                    segments.pop_back();
                    return true;
                }
            } else if (descend(p + len)) {
                segments.pop_back();
                return true;
            }
            segments.pop_back();
        }
        return false;
    };
    descend(0);

    if (results.empty()) return std::nullopt;
    return results;
}

std::optional<std::vector<ParseResult>> parse_pattern_covered(const MnpType& type,
                                                              const PatternSet& patterns,
                                                              const IslandIndex& islands,
                                                              const ParserOptions& options) {
    if (type.length() < 2) return std::nullopt;
    std::vector<SeqItem> items = make_seq_items(type, islands.case_sensitive());
    std::vector<ParseResult> results;

    for (const ParseTree& tree : match_pattern(items, patterns)) {
        ParseResult result;
        result.tree = to_positions(tree, items);
        result.method = ParseMethod::PatternCovered;
        result.reliability = reliability_score(ParseMethod::PatternCovered);
        push_unique(results, std::move(result));
        if (!options.non_deterministic) break;
    }
    if (!results.empty()) return results;

    for (const IslandMatch& match : islands.find(items, options.islands)) {
        Reduction reduction = reduce_by_island(items, match, islands);
        if (reduction.items.size() < 2) continue;
        const IslandEntry& entry = islands.entry(match.entry_id);
        for (const ParseTree& tree : match_pattern(reduction.items, patterns)) {
            ParseTree simplified = to_positions(tree, reduction.items);
            ParseResult result;
            result.tree = expand_parse(simplified, reduction.substitutions);
            result.method = ParseMethod::PatternCovered;
            result.reliability = reliability_score(ParseMethod::PatternCovered);
            result.islands_used.push_back(match.entry_id);
            if (entry.origin == IslandOrigin::Testified)
                result.terms_used.push_back(entry.term_id);
            push_unique(results, std::move(result));
            if (!options.non_deterministic) return results;
        }
    }
    if (results.empty()) return std::nullopt;
    return results;
}

namespace {

// Working element of the progressive reduction: the surviving head word of
// everything merged so far, plus the accumulated subtree.
struct MergedItem {
    SeqItem base;
    ParseTree tree;
};

struct Move {
    int length = 0; // matched item count
    bool at_left = true;
    bool is_pattern = true;
    int id = -1;                   // pattern id or island entry id
    std::vector<int> item_indices; // matched items, increasing
    ParseTree shape;               // pattern shape (patterns only)
};

// True when a beats b under: longest, then left end, then patterns before
// islands (pattern-file order among patterns).
bool move_beats(const Move& a, const Move& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.at_left != b.at_left) return a.at_left;
    if (a.is_pattern != b.is_pattern) return a.is_pattern;
    return a.id < b.id;
}

std::vector<SeqItem> base_items(const std::vector<MergedItem>& merged) {
    std::vector<SeqItem> out;
    out.reserve(merged.size());
    for (const MergedItem& m : merged) out.push_back(m.base);
    return out;
}

std::optional<Move> best_pattern_move(const std::vector<SeqItem>& seq,
                                      const PatternSet& patterns) {
    const int n = static_cast<int>(seq.size());
    for (int len = std::min(n, patterns.max_leaf_count()); len >= 2; --len) {
        for (bool at_left : {true, false}) {
            if (!at_left && len == n) continue; // same span as the left probe
            int start = at_left ? 0 : n - len;
            std::vector<SeqItem> span(seq.begin() + start, seq.begin() + start + len);
            std::string key;
            for (int i = 0; i < len; ++i) {
                if (i > 0) key += ' ';
                key += span[static_cast<std::size_t>(i)].tag;
            }
            for (int id : patterns.candidates(key)) {
                const ParsingPattern& pattern =
                    patterns.patterns()[static_cast<std::size_t>(id)];
                bool ok = true;
                for (int i = 0; ok && i < len; ++i) {
                    const PatternLeaf& leaf = pattern.leaves()[static_cast<std::size_t>(i)];
                    if (!leaf.lemma.empty() &&
                        fold_case(span[static_cast<std::size_t>(i)].lemma) != leaf.lemma)
                        ok = false;
                }
                if (!ok) continue;
                Move move;
                move.length = len;
                move.at_left = at_left;
                move.is_pattern = true;
                move.id = id;
                for (int i = start; i < start + len; ++i) move.item_indices.push_back(i);
                move.shape = pattern.shape();
                return move;
            }
        }
    }
    return std::nullopt;
}

std::optional<Move> best_island_move(const std::vector<SeqItem>& seq,
                                     const IslandIndex& islands,
                                     const IslandOptions& island_options) {
    const int n = static_cast<int>(seq.size());
    // find() sorts longest-first then lexicographically by matched items, so
    // the first end-anchored match is the best one (left anchors sort before
    // right anchors of the same length).
    for (const IslandMatch& match : islands.find(seq, island_options)) {
        bool left = match.items.front() == 0;
        bool right = match.items.back() == n - 1;
        if (!left && !right) continue;
        Move move;
        move.length = static_cast<int>(match.items.size());
        move.at_left = left;
        move.is_pattern = false;
        move.id = match.entry_id;
        move.item_indices = match.items;
        return move;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<ParseResult>> parse_progressive(const MnpType& type,
                                                          const PatternSet& patterns,
                                                          const IslandIndex& islands,
                                                          const ParserOptions& options) {
    if (type.length() < 2) return std::nullopt;

    std::vector<MergedItem> merged;
    for (const SeqItem& item : make_seq_items(type, islands.case_sensitive()))
        merged.push_back(MergedItem{item, ParseTree::leaf(item.position)});

    std::vector<int> islands_used;
    std::vector<int> terms_used;

    while (merged.size() > 1) {
        std::vector<SeqItem> seq = base_items(merged);
        std::optional<Move> pattern_move = best_pattern_move(seq, patterns);
        std::optional<Move> island_move = best_island_move(seq, islands, options.islands);

        const Move* move = nullptr;
        if (pattern_move && island_move)
            move = move_beats(*pattern_move, *island_move) ? &*pattern_move : &*island_move;
        else if (pattern_move)
            move = &*pattern_move;
        else if (island_move)
            move = &*island_move;
        if (!move) return std::nullopt; // no progress

        // Combine the matched items' subtrees under the move's tree shape.
        ParseTree shape;
        int head_offset = 0;
        if (move->is_pattern) {
            shape = move->shape;
            head_offset = shape.head_leaf();
        } else {
            const IslandEntry& entry = islands.entry(move->id);
            shape = entry.tree;
            head_offset = entry.head_offset;
            islands_used.push_back(move->id);
            if (entry.origin == IslandOrigin::Testified)
                terms_used.push_back(entry.term_id);
        }
        std::map<int, ParseTree> parts;
        for (std::size_t offset = 0; offset < move->item_indices.size(); ++offset)
            parts[static_cast<int>(offset)] =
                merged[static_cast<std::size_t>(move->item_indices[offset])].tree;
        MergedItem combined;
        combined.tree = shape.substitute(parts);
        combined.base =
            merged[static_cast<std::size_t>(move->item_indices[static_cast<std::size_t>(
                       head_offset)])]
                .base;

        std::vector<MergedItem> next;
        int head_item = move->item_indices[static_cast<std::size_t>(head_offset)];
        for (int i = 0; i < static_cast<int>(merged.size()); ++i) {
            bool matched = std::binary_search(move->item_indices.begin(),
                                              move->item_indices.end(), i);
            if (matched && i != head_item) continue;
            if (i == head_item)
                next.push_back(combined);
            else
                next.push_back(std::move(merged[static_cast<std::size_t>(i)]));
        }
        merged = std::move(next);
    }

    ParseResult result;
    result.tree = merged.front().tree;
    result.method = ParseMethod::Progressive;
    result.reliability = reliability_score(ParseMethod::Progressive);
    result.islands_used = std::move(islands_used);
    result.terms_used = std::move(terms_used);
    std::vector<ParseResult> results;
    results.push_back(std::move(result));
    return results;
}

namespace {

void parse_pass(const std::vector<int>& targets, int threads,
                const std::function<std::vector<ParseResult>(int)>& parse_one,
                std::vector<std::vector<ParseResult>>& out) {
#ifdef _OPENMP
    if (threads != 1) {
        const int count = static_cast<int>(targets.size());
        if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 32) num_threads(threads)
        for (int i = 0; i < count; ++i) {
            int t = targets[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(t)] = parse_one(t);
        }
        return;
    }
#else
    (void)threads;
#endif
    for (int t : targets) out[static_cast<std::size_t>(t)] = parse_one(t);
}

ParsingOutcome run_parsing_impl(const std::vector<MnpType>& types,
                                const Terminology& terminology,
                                const PatternSet& patterns, const ParserOptions& options,
                                int threads) {
    ParsingOutcome outcome;
    outcome.by_type.resize(types.size());
    outcome.islands = IslandIndex::from_terminology(terminology, patterns);

    std::vector<int> multiword;
    for (std::size_t t = 0; t < types.size(); ++t)
        if (!types[t].is_monolexical()) multiword.push_back(static_cast<int>(t));

    // Pass 1: tt-covered, then pattern-covered with testified islands only.
    parse_pass(
        multiword, threads,
        [&](int t) -> std::vector<ParseResult> {
            const MnpType& type = types[static_cast<std::size_t>(t)];
            auto r = parse_tt_covered(type, terminology, patterns, options);
            if (!r) r = parse_pattern_covered(type, patterns, outcome.islands, options);
            return r ? std::move(*r) : std::vector<ParseResult>{};
        },
        outcome.by_type);

    // Harvest endogenous islands in canonical type order, then pass 2 over
    // the remaining types. With fixpoint_islands the harvest/retry cycle
    // repeats until no new type parses.
    std::vector<int> remaining;
    for (int t : multiword) {
        if (outcome.parsed(static_cast<std::size_t>(t))) {
            const MnpType& type = types[static_cast<std::size_t>(t)];
            for (const ParseResult& result : outcome.by_type[static_cast<std::size_t>(t)])
                outcome.islands.harvest(type, result.tree);
        } else {
            remaining.push_back(t);
        }
    }

    while (!remaining.empty()) {
        parse_pass(
            remaining, threads,
            [&](int t) -> std::vector<ParseResult> {
                const MnpType& type = types[static_cast<std::size_t>(t)];
                auto r = parse_pattern_covered(type, patterns, outcome.islands, options);
                if (!r) r = parse_progressive(type, patterns, outcome.islands, options);
                return r ? std::move(*r) : std::vector<ParseResult>{};
            },
            outcome.by_type);

        std::vector<int> still_unparsed;
        bool progress = false;
        for (int t : remaining) {
            if (outcome.parsed(static_cast<std::size_t>(t))) {
                progress = true;
                if (options.fixpoint_islands) {
                    const MnpType& type = types[static_cast<std::size_t>(t)];
                    for (const ParseResult& result :
                         outcome.by_type[static_cast<std::size_t>(t)])
                        outcome.islands.harvest(type, result.tree);
                }
            } else {
                still_unparsed.push_back(t);
            }
        }
        remaining = std::move(still_unparsed);
        if (!options.fixpoint_islands || !progress) break;
    }

    return outcome;
}

} // namespace

ParsingOutcome run_parsing(const std::vector<MnpType>& types, const Terminology& terminology,
                           const PatternSet& patterns, const ParserOptions& options) {
    return run_parsing_impl(types, terminology, patterns, options, options.threads);
}

ParsingOutcome run_parsing_serial(const std::vector<MnpType>& types,
                                  const Terminology& terminology,
                                  const PatternSet& patterns, const ParserOptions& options) {
    return run_parsing_impl(types, terminology, patterns, options, 1);
}

} // namespace termex
