#ifndef TERMEX_PARSER_HPP
#define TERMEX_PARSER_HPP

#include <optional>
#include <vector>

#include "termex/chunker.hpp"
#include "termex/islands.hpp"
#include "termex/parse_tree.hpp"
#include "termex/pattern_set.hpp"
#include "termex/terminology.hpp"

namespace termex {

// Parsing methods in decreasing order of reliability.
enum class ParseMethod {
    TtCovered,      // the MNP is one testified term or a concatenation of them
    PatternCovered, // the (possibly island-simplified) MNP matches a pattern
    Progressive,    // the MNP is reduced from its ends by patterns and islands
};

constexpr int reliability_score(ParseMethod method) {
    switch (method) {
    case ParseMethod::TtCovered: return 3;
    case ParseMethod::PatternCovered: return 2;
    case ParseMethod::Progressive: return 1;
    }
    return 0;
}

const char* method_name(ParseMethod method);

struct ParseResult {
    ParseTree tree; // over the MNP's word positions
    ParseMethod method = ParseMethod::Progressive;
    int reliability = 0;
    std::vector<int> islands_used; // IslandIndex entry ids
    std::vector<int> terms_used;   // TestifiedTerm ids (direct or via islands)
};

struct ParserOptions {
    bool non_deterministic = false; // keep all parses of the succeeding method
    IslandOptions islands;
    bool fixpoint_islands = false; // re-harvest islands until no progress
    bool case_sensitive_terms = false;
    int threads = 0; // 0 = OpenMP default, 1 = serial
};

// One tree per pattern whose leaf sequence matches the items exactly (tag
// equality; lemma anchors compared against case-folded lemmas), in pattern
// file order. Trees are over item indices 0..n-1.
std::vector<ParseTree> match_pattern(const std::vector<SeqItem>& seq,
                                     const PatternSet& patterns);

// Method 1: the MNP equals a single testified term (parse provided by the
// term or computed from patterns), or is exactly a concatenation of two or
// more testified terms whose heads pattern-parse.
std::optional<std::vector<ParseResult>> parse_tt_covered(const MnpType& type,
                                                         const Terminology& terminology,
                                                         const PatternSet& patterns,
                                                         const ParserOptions& options);

// Method 2: direct pattern match, else each island reduction (longest
// first) followed by a pattern match of the simplified sequence.
std::optional<std::vector<ParseResult>> parse_pattern_covered(const MnpType& type,
                                                              const PatternSet& patterns,
                                                              const IslandIndex& islands,
                                                              const ParserOptions& options);

// Method 3: repeatedly merge the longest pattern or island match anchored
// at the left or right end (longest wins; ties prefer the left end, then
// patterns in file order) until one item covering every word remains.
std::optional<std::vector<ParseResult>> parse_progressive(const MnpType& type,
                                                          const PatternSet& patterns,
                                                          const IslandIndex& islands,
                                                          const ParserOptions& options);

struct ParsingOutcome {
    // Aligned with the input type vector; empty = unparsed or monolexical.
    std::vector<std::vector<ParseResult>> by_type;
    // Final island index (testified + harvested endogenous entries).
    IslandIndex islands{false};

    bool parsed(std::size_t type_index) const { return !by_type[type_index].empty(); }
};

// The two-pass driver. Pass 1 tries tt-covered then pattern-covered with
// testified islands only; every parse tree and each of its internal
// subtrees is then harvested as an endogenous island; pass 2 retries the
// remaining types with pattern-covered and finally progressive. Monolexical
// types are never parsed. With threads != 1 the passes run in parallel over
// types with output identical to the serial reference.
ParsingOutcome run_parsing(const std::vector<MnpType>& types, const Terminology& terminology,
                           const PatternSet& patterns, const ParserOptions& options);

// Serial reference implementation, kept for testing and benchmarking.
ParsingOutcome run_parsing_serial(const std::vector<MnpType>& types,
                                  const Terminology& terminology,
                                  const PatternSet& patterns, const ParserOptions& options);

} // namespace termex

#endif
