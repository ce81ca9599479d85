#include "termex/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include "termex/errors.hpp"
#include "termex/text_util.hpp"

namespace termex {

namespace {

double round2(double x) { return std::round(x * 100.0) / 100.0; }

std::vector<std::string> folded_words(const MnpType& type, bool lemmas) {
    std::vector<std::string> out;
    out.reserve(type.first().words.size());
    for (const TaggedWord& w : type.first().words)
        out.push_back(fold_case(lemmas ? w.lemma : w.surface));
    return out;
}

} // namespace

std::string serialize_parse_over_type(const ParseTree& tree, const MnpType& type) {
    std::vector<std::string> surfaces = folded_words(type, false);
    return tree.serialize(
        [&](int position) { return surfaces[static_cast<std::size_t>(position)]; });
}

std::vector<TermCandidate> build_term_candidates(const std::vector<MnpType>& types,
                                                 const ParsingOutcome& outcome) {
    std::vector<TermCandidate> candidates;
    for (std::size_t t = 0; t < types.size(); ++t) {
        if (types[t].is_monolexical() || !outcome.parsed(t)) continue;
        const std::vector<ParseResult>& parses = outcome.by_type[t];
        TermCandidate candidate;
        candidate.type_index = t;
        candidate.parses = parses;
        candidate.frequency = types[t].frequency();
        const ParseResult* best = &parses.front();
        for (const ParseResult& parse : parses)
            if (parse.reliability > best->reliability) best = &parse;
        candidate.best_reliability = best->reliability;
        std::vector<std::string> lemmas = folded_words(types[t], true);
        candidate.head_lemma = lemmas[static_cast<std::size_t>(best->tree.head_leaf())];
        candidates.push_back(std::move(candidate));
    }
    return candidates;
}

void rank_candidates(std::vector<TermCandidate>& candidates,
                     const std::vector<MnpType>& types) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const TermCandidate& a, const TermCandidate& b) {
                         if (a.best_reliability != b.best_reliability)
                             return a.best_reliability > b.best_reliability;
                         if (a.frequency != b.frequency) return a.frequency > b.frequency;
                         const MnpType& ta = types[a.type_index];
                         const MnpType& tb = types[b.type_index];
                         if (ta.lemma_key != tb.lemma_key) return ta.lemma_key < tb.lemma_key;
                         return ta.inflected_key < tb.inflected_key;
                     });
}

ChunkingStats compute_chunking_stats(const std::vector<MnpType>& types, const Corpus& corpus,
                                     std::size_t tag_corrected_words) {
    (void)corpus;
    ChunkingStats stats;
    stats.tag_corrected_words = tag_corrected_words;
    std::set<std::string> pos_sequences;
    std::size_t complex_types = 0;
    std::size_t complex_type_words = 0;
    for (const MnpType& type : types) {
        ++stats.mnp_types;
        stats.mnp_occurrences += type.frequency();
        if (type.pos_divergent) ++stats.pos_divergent_types;
        if (type.is_monolexical()) {
            ++stats.monolexical_types;
            stats.monolexical_occurrences += type.frequency();
        } else {
            ++complex_types;
            complex_type_words += type.length();
            stats.complex_mnp_occurrences += type.frequency();
            stats.complex_mnp_words += type.frequency() * type.length();
            std::string key;
            for (std::size_t i = 0; i < type.pos_sequence.size(); ++i) {
                if (i > 0) key += ' ';
                key += type.pos_sequence[i];
            }
            pos_sequences.insert(key);
        }
    }
    stats.pos_sequence_types = pos_sequences.size();
    if (stats.complex_mnp_occurrences > 0) {
        stats.words_per_complex_mnp_defined = true;
        stats.words_per_complex_mnp =
            round2(static_cast<double>(stats.complex_mnp_words) /
                   static_cast<double>(stats.complex_mnp_occurrences));
        stats.words_per_complex_mnp_by_type = round2(
            static_cast<double>(complex_type_words) / static_cast<double>(complex_types));
    }
    return stats;
}

ParsingStats compute_parsing_stats(const std::vector<MnpType>& types,
                                   const ParsingOutcome& outcome,
                                   const Terminology& terminology) {
    ParsingStats stats;
    stats.terms_total = terminology.size();
    std::set<int> used_terms;
    for (std::size_t t = 0; t < types.size(); ++t) {
        const MnpType& type = types[t];
        if (type.is_monolexical()) continue;
        if (!outcome.parsed(t)) {
            ++stats.unparsed.types;
            stats.unparsed.occurrences += type.frequency();
            continue;
        }
        const std::vector<ParseResult>& parses = outcome.by_type[t];
        MethodTally* tally = nullptr;
        switch (parses.front().method) {
        case ParseMethod::TtCovered: tally = &stats.tt_covered; break;
        case ParseMethod::PatternCovered: tally = &stats.pattern_covered; break;
        case ParseMethod::Progressive: tally = &stats.progressive; break;
        }
        ++tally->types;
        tally->occurrences += type.frequency();
        for (const ParseResult& parse : parses)
            for (int term : parse.terms_used) used_terms.insert(term);
    }
    stats.terms_used = used_terms.size();
    return stats;
}

nlohmann::ordered_json make_report(const ChunkingStats& chunking, const ParsingStats& parsing,
                                   const Corpus& corpus, const RunConfigEcho& config) {
    nlohmann::ordered_json report;

    nlohmann::ordered_json inputs;
    inputs["corpus"] = {{"name", config.corpus.name},
                        {"hash", config.corpus.hash},
                        {"sentences", corpus.sentence_count()},
                        {"words", corpus.word_count}};
    inputs["chunking"] = {{"name", config.chunking.name}, {"hash", config.chunking.hash}};
    inputs["patterns"] = {{"name", config.patterns.name},
                          {"hash", config.patterns.hash},
                          {"count", config.patterns.items}};
    nlohmann::ordered_json terminologies = nlohmann::ordered_json::array();
    for (const InputDigest& digest : config.terminologies)
        terminologies.push_back(
            {{"name", digest.name}, {"hash", digest.hash}, {"terms", digest.items}});
    inputs["terminologies"] = std::move(terminologies);
    inputs["flags"] = {{"non_deterministic", config.non_deterministic},
                       {"noncontiguous_islands", config.noncontiguous_islands},
                       {"island_gap_limit", config.island_gap_limit},
                       {"fixpoint_islands", config.fixpoint_islands},
                       {"case_sensitive_terms", config.case_sensitive_terms}};
    report["inputs"] = std::move(inputs);

    report["chunking"] = {
        {"mnp_types", chunking.mnp_types},
        {"mnp_occurrences", chunking.mnp_occurrences},
        {"monolexical_types", chunking.monolexical_types},
        {"monolexical_occurrences", chunking.monolexical_occurrences},
        {"complex_mnp_occurrences", chunking.complex_mnp_occurrences},
        {"complex_mnp_words", chunking.complex_mnp_words},
        {"words_per_complex_mnp", chunking.words_per_complex_mnp},
        {"words_per_complex_mnp_by_type", chunking.words_per_complex_mnp_by_type},
        {"words_per_complex_mnp_defined", chunking.words_per_complex_mnp_defined},
        {"pos_sequence_types", chunking.pos_sequence_types},
        {"pos_divergent_types", chunking.pos_divergent_types},
        {"tag_corrected_words", chunking.tag_corrected_words},
    };

    auto tally = [](const MethodTally& t) {
        return nlohmann::ordered_json{{"types", t.types}, {"occurrences", t.occurrences}};
    };
    report["parsing"] = {
        {"tt_covered", tally(parsing.tt_covered)},
        {"pattern_covered", tally(parsing.pattern_covered)},
        {"progressive", tally(parsing.progressive)},
        {"unparsed", tally(parsing.unparsed)},
        {"terminology",
         {{"terms_used", parsing.terms_used}, {"terms_total", parsing.terms_total}}},
    };
    return report;
}

namespace {

std::string pos_sequence_string(const MnpType& type) {
    std::string out;
    for (std::size_t i = 0; i < type.pos_sequence.size(); ++i) {
        if (i > 0) out += ' ';
        out += type.pos_sequence[i];
    }
    return out;
}

// (frequency desc, inflected key asc) over type indices.
std::vector<std::size_t> sorted_by_frequency(const std::vector<MnpType>& types,
                                             const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> out = indices;
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
        if (types[a].frequency() != types[b].frequency())
            return types[a].frequency() > types[b].frequency();
        return types[a].inflected_key < types[b].inflected_key;
    });
    return out;
}

} // namespace

void emit_outputs(const std::string& out_dir, const std::vector<TermCandidate>& candidates,
                  const std::vector<MnpType>& types, const ParsingOutcome& outcome,
                  const nlohmann::ordered_json& report) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError(out_dir, "cannot create output directory: " + ec.message());

    std::ostringstream cand;
    cand << "lemma_key\tinflected_key\thead_lemma\tparse\tmethod\treliability\tfrequency\n";
    for (const TermCandidate& candidate : candidates) {
        const MnpType& type = types[candidate.type_index];
        const ParseResult* best = &candidate.parses.front();
        for (const ParseResult& parse : candidate.parses)
            if (parse.reliability > best->reliability) best = &parse;
        cand << type.lemma_key << '\t' << type.inflected_key << '\t' << candidate.head_lemma
             << '\t' << serialize_parse_over_type(best->tree, type) << '\t'
             << method_name(best->method) << '\t' << candidate.best_reliability << '\t'
             << candidate.frequency << '\n';
    }

    std::vector<std::size_t> unparsed_ids;
    std::vector<std::size_t> monolexical_ids;
    for (std::size_t t = 0; t < types.size(); ++t) {
        if (types[t].is_monolexical())
            monolexical_ids.push_back(t);
        else if (!outcome.parsed(t))
            unparsed_ids.push_back(t);
    }

    std::ostringstream unparsed;
    unparsed << "inflected_key\tpos_sequence\tfrequency\n";
    for (std::size_t t : sorted_by_frequency(types, unparsed_ids))
        unparsed << types[t].inflected_key << '\t' << pos_sequence_string(types[t]) << '\t'
                 << types[t].frequency() << '\n';

    std::ostringstream monolexical;
    monolexical << "inflected_key\tpos_sequence\tfrequency\n";
    for (std::size_t t : sorted_by_frequency(types, monolexical_ids))
        monolexical << types[t].inflected_key << '\t' << pos_sequence_string(types[t]) << '\t'
                    << types[t].frequency() << '\n';

    const std::filesystem::path dir(out_dir);
    write_text_file((dir / "candidates.tsv").string(), cand.str());
    write_text_file((dir / "unparsed.tsv").string(), unparsed.str());
    write_text_file((dir / "monolexical.tsv").string(), monolexical.str());
    // report.json last: its presence marks a completed run
    write_text_file((dir / "report.json").string(), report.dump(2) + "\n");
}

} // namespace termex
