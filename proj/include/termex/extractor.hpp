#ifndef TERMEX_EXTRACTOR_HPP
#define TERMEX_EXTRACTOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "termex/chunker.hpp"
#include "termex/corpus.hpp"
#include "termex/parser.hpp"
#include "termex/terminology.hpp"

#include "json.hpp"

namespace termex {

// A parsed multi-word MNP type: the unit of extraction.
struct TermCandidate {
    std::size_t type_index = 0;
    std::vector<ParseResult> parses;
    std::string head_lemma; // from the best parse
    int best_reliability = 0;
    std::size_t frequency = 0;
};

struct ChunkingStats {
    std::size_t mnp_types = 0;
    std::size_t mnp_occurrences = 0;
    std::size_t monolexical_types = 0;
    std::size_t monolexical_occurrences = 0;
    std::size_t complex_mnp_occurrences = 0;
    std::size_t complex_mnp_words = 0;
    double words_per_complex_mnp = 0.0; // occurrence mean, 2 decimals
    double words_per_complex_mnp_by_type = 0.0;
    bool words_per_complex_mnp_defined = false;
    std::size_t pos_sequence_types = 0; // distinct POS sequences of multi-word types
    std::size_t pos_divergent_types = 0;
    std::size_t tag_corrected_words = 0;
};

struct MethodTally {
    std::size_t types = 0;
    std::size_t occurrences = 0;
};

struct ParsingStats {
    MethodTally tt_covered;
    MethodTally pattern_covered;
    MethodTally progressive;
    MethodTally unparsed;
    std::size_t terms_used = 0;
    std::size_t terms_total = 0;
};

// Fingerprints of the run's inputs, echoed into report.json so result rows
// are attributable to exact inputs.
struct InputDigest {
    std::string name; // base name, not the full path
    std::string hash; // fnv1a64 of the file bytes
    std::size_t items = 0;
};

struct RunConfigEcho {
    InputDigest corpus;
    InputDigest chunking;
    InputDigest patterns;
    std::vector<InputDigest> terminologies;
    bool non_deterministic = false;
    bool noncontiguous_islands = false;
    int island_gap_limit = 1;
    bool fixpoint_islands = false;
    bool case_sensitive_terms = false;
};

std::vector<TermCandidate> build_term_candidates(const std::vector<MnpType>& types,
                                                 const ParsingOutcome& outcome);

// Descending (reliability, frequency), then ascending lemma key (inflected
// key as the final tiebreak). Total and stable.
void rank_candidates(std::vector<TermCandidate>& candidates,
                     const std::vector<MnpType>& types);

ChunkingStats compute_chunking_stats(const std::vector<MnpType>& types,
                                     const Corpus& corpus,
                                     std::size_t tag_corrected_words);

ParsingStats compute_parsing_stats(const std::vector<MnpType>& types,
                                   const ParsingOutcome& outcome,
                                   const Terminology& terminology);

nlohmann::ordered_json make_report(const ChunkingStats& chunking, const ParsingStats& parsing,
                                   const Corpus& corpus, const RunConfigEcho& config);

// Writes candidates.tsv, unparsed.tsv, monolexical.tsv and report.json into
// out_dir (created if missing). Output is canonically sorted and
// byte-identical across reruns on the same inputs; report.json is written
// last. Throws IoError on failure.
void emit_outputs(const std::string& out_dir, const std::vector<TermCandidate>& candidates,
                  const std::vector<MnpType>& types, const ParsingOutcome& outcome,
                  const nlohmann::ordered_json& report);

// Serialized forms used by the TSV writers (also handy in tests).
std::string serialize_parse_over_type(const ParseTree& tree, const MnpType& type);

} // namespace termex

#endif
