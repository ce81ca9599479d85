#include "termex/islands.hpp"

#include <algorithm>
#include <functional>

#include "termex/text_util.hpp"

namespace termex {

std::string IslandIndex::normalize_word(std::string_view word) const {
    return case_sensitive_ ? std::string(word) : fold_case(word);
}

void IslandIndex::add(IslandEntry entry) {
    std::string surface_key = join_words(entry.surface_words);
    std::string lemma_key = join_words(entry.lemma_words);
    int id = static_cast<int>(entries_.size());
    bool referenced = false;
    if (by_surface_.emplace(surface_key, id).second) referenced = true;
    if (!entry.lemma_words.empty() && by_lemma_.emplace(lemma_key, id).second)
        referenced = true;
    if (!referenced) return; // an earlier entry owns both keys
    if (entry.surface_words.size() > max_key_length_)
        max_key_length_ = entry.surface_words.size();
    entries_.push_back(std::move(entry));
}

namespace {

std::vector<SeqItem> term_seq_items(const TestifiedTerm& term, const IslandIndex& index) {
    std::vector<SeqItem> items(term.length());
    for (std::size_t i = 0; i < term.length(); ++i) {
        items[i].position = static_cast<int>(i);
        items[i].surface = index.normalize_word(term.surface_words[i]);
        items[i].lemma = term.lemmas.empty() ? fold_case(term.surface_words[i])
                                             : fold_case(term.lemmas[i]);
        items[i].tag = term.pos_tags.empty() ? std::string() : term.pos_tags[i];
    }
    return items;
}

// Declared in parser.cpp; used here to pattern-parse testified terms that
// come without an explicit parse.
} // namespace

std::vector<ParseTree> match_pattern(const std::vector<SeqItem>& seq,
                                     const PatternSet& patterns);

IslandIndex IslandIndex::from_terminology(const Terminology& terminology,
                                          const PatternSet& patterns) {
    IslandIndex index(terminology.case_sensitive());
    for (std::size_t id = 0; id < terminology.size(); ++id) {
        const TestifiedTerm& term = terminology.term(static_cast<int>(id));
        if (term.length() < 2) continue;

        ParseTree tree;
        if (term.parse) {
            tree = *term.parse;
        } else if (!term.pos_tags.empty()) {
            std::vector<ParseTree> trees =
                match_pattern(term_seq_items(term, index), patterns);
            if (trees.empty()) continue; // no head derivable
            tree = std::move(trees.front());
        } else {
            continue;
        }

        IslandEntry entry;
        entry.surface_words.reserve(term.length());
        for (const std::string& w : term.surface_words)
            entry.surface_words.push_back(index.normalize_word(w));
        for (const std::string& l : term.lemmas)
            entry.lemma_words.push_back(index.normalize_word(l));
        entry.head_offset = tree.head_leaf();
        entry.tree = std::move(tree);
        entry.origin = IslandOrigin::Testified;
        entry.term_id = static_cast<int>(id);
        index.add(std::move(entry));
    }
    return index;
}

void IslandIndex::harvest(const MnpType& type, const ParseTree& tree) {
    const MnpOccurrence& first = type.first();
    tree.for_each_internal([&](const ParseTree& subtree) {
        std::vector<int> positions = subtree.leaves();
        if (positions.size() < 2) return;
        std::vector<int> sorted = positions;
        std::sort(sorted.begin(), sorted.end());

        IslandEntry entry;
        entry.surface_words.reserve(sorted.size());
        entry.lemma_words.reserve(sorted.size());
        std::map<int, int> rank;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const TaggedWord& w = first.words[static_cast<std::size_t>(sorted[i])];
            entry.surface_words.push_back(normalize_word(w.surface));
            entry.lemma_words.push_back(normalize_word(w.lemma));
            rank[sorted[i]] = static_cast<int>(i);
        }
        entry.tree = subtree.relabel([&](int p) { return rank.at(p); });
        entry.head_offset = entry.tree.head_leaf();
        entry.origin = IslandOrigin::Endogenous;
        add(std::move(entry));
    });
}

namespace {

struct RawMatch {
    std::vector<int> items;
    int entry_id;
};

bool proper_subset(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() >= b.size()) return false;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<IslandMatch> IslandIndex::find(const std::vector<SeqItem>& items,
                                           const IslandOptions& options) const {
    std::vector<RawMatch> raw;
    if (entries_.empty() || items.size() < 2) return {};
    const int n = static_cast<int>(items.size());
    const int longest =
        static_cast<int>(std::min<std::size_t>(max_key_length_, items.size() - 1));

    auto lookup = [&](const std::vector<int>& taken) -> int {
        std::string surface_key;
        std::string lemma_key;
        for (std::size_t i = 0; i < taken.size(); ++i) {
            const SeqItem& item = items[static_cast<std::size_t>(taken[i])];
            if (i > 0) {
                surface_key += ' ';
                lemma_key += ' ';
            }
            surface_key += item.surface;
            lemma_key += item.lemma;
        }
        auto s = by_surface_.find(surface_key);
        if (s != by_surface_.end()) return s->second;
        auto l = by_lemma_.find(lemma_key);
        if (l != by_lemma_.end()) return l->second;
        return -1;
    };

    // Contiguous matches.
    for (int start = 0; start < n; ++start) {
        std::vector<int> taken;
        for (int len = 2; len <= longest && start + len <= n; ++len) {
            taken.clear();
            for (int i = start; i < start + len; ++i) taken.push_back(i);
            int entry_id = lookup(taken);
            if (entry_id >= 0) raw.push_back(RawMatch{taken, entry_id});
        }
    }

    // Order-preserving matches with internal gaps (total skipped words
    // bounded by gap_limit). The last step must take an item, so gaps stay
    // internal.
    if (options.noncontiguous && options.gap_limit > 0) {
        std::vector<int> taken;
        std::function<void(int, int, bool)> dfs = [&](int next, int gaps_left,
                                                      bool gap_used) {
            if (static_cast<int>(taken.size()) >= 2 && gap_used &&
                static_cast<int>(taken.size()) <= n - 1) {
                int entry_id = lookup(taken);
                if (entry_id >= 0) raw.push_back(RawMatch{taken, entry_id});
            }
            if (next >= n || static_cast<int>(taken.size()) >= longest) return;
            taken.push_back(next);
            dfs(next + 1, gaps_left, gap_used);
            taken.pop_back();
            if (gaps_left > 0 && !taken.empty()) {
                // skipping before the first taken item would just shift the
                // anchor; starts are enumerated separately
                dfs(next + 1, gaps_left - 1, true);
            }
        };
        for (int start = 0; start < n; ++start) {
            taken.clear();
            taken.push_back(start);
            dfs(start + 1, options.gap_limit, false);
            taken.clear();
        }
    }

    // Keep maximal matches only: drop any match properly contained in
    // another.
    std::vector<IslandMatch> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < raw.size() && !contained; ++j)
            if (j != i && proper_subset(raw[i].items, raw[j].items)) contained = true;
        if (!contained) out.push_back(IslandMatch{raw[i].items, raw[i].entry_id});
    }

    std::sort(out.begin(), out.end(), [](const IslandMatch& a, const IslandMatch& b) {
        if (a.items.size() != b.items.size()) return a.items.size() > b.items.size();
        if (a.items != b.items) return a.items < b.items;
        return a.entry_id < b.entry_id;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const IslandMatch& a, const IslandMatch& b) {
                              return a.items == b.items && a.entry_id == b.entry_id;
                          }),
              out.end());
    return out;
}

std::vector<SeqItem> make_seq_items(const MnpType& type, bool case_sensitive) {
    const MnpOccurrence& first = type.first();
    std::vector<SeqItem> items(first.words.size());
    for (std::size_t i = 0; i < first.words.size(); ++i) {
        items[i].position = static_cast<int>(i);
        items[i].surface =
            case_sensitive ? first.words[i].surface : fold_case(first.words[i].surface);
        items[i].lemma =
            case_sensitive ? first.words[i].lemma : fold_case(first.words[i].lemma);
        items[i].tag = first.words[i].pos;
    }
    return items;
}

Reduction reduce_by_island(const std::vector<SeqItem>& items, const IslandMatch& match,
                           const IslandIndex& index) {
    const IslandEntry& entry = index.entry(match.entry_id);
    Reduction reduction;
    reduction.entry_id = match.entry_id;

    const int head_item =
        match.items[static_cast<std::size_t>(entry.head_offset)];
    ParseTree island_tree = entry.tree.relabel([&](int offset) {
        return items[static_cast<std::size_t>(match.items[static_cast<std::size_t>(offset)])]
            .position;
    });
    reduction.substitutions[items[static_cast<std::size_t>(head_item)].position] =
        std::move(island_tree);

    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
        bool matched = std::binary_search(match.items.begin(), match.items.end(), i);
        if (matched && i != head_item) continue; // removed, folded into the island
        reduction.items.push_back(items[static_cast<std::size_t>(i)]);
    }
    return reduction;
}

ParseTree expand_parse(const ParseTree& simplified,
                       const std::map<int, ParseTree>& substitutions) {
    return simplified.substitute(substitutions);
}

} // namespace termex
