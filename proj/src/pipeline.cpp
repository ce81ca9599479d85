#include "termex/pipeline.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "termex/chunker.hpp"
#include "termex/chunking_config.hpp"
#include "termex/corpus.hpp"
#include "termex/errors.hpp"
#include "termex/parser.hpp"
#include "termex/pattern_set.hpp"
#include "termex/terminology.hpp"
#include "termex/text_util.hpp"

namespace termex {

namespace {

std::string base_name(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

// Reads an input file, mapping open failures to ParseError so that missing
// resources exit with code 1 and name the file.
std::string read_input(const std::string& path) {
    try {
        return read_text_file(path);
    } catch (const IoError& e) {
        throw ParseError(path, 0, "cannot read input file");
    }
}

} // namespace

RunSummary run_pipeline_or_throw(const RunOptions& options, std::ostream* summary_out) {
    RunConfigEcho echo;
    echo.non_deterministic = options.non_deterministic;
    echo.noncontiguous_islands = options.noncontiguous_islands;
    echo.island_gap_limit = options.island_gap_limit;
    echo.fixpoint_islands = options.fixpoint_islands;
    echo.case_sensitive_terms = options.case_sensitive_terms;

    std::string corpus_text = read_input(options.corpus_path);
    echo.corpus = InputDigest{base_name(options.corpus_path), fnv1a64_hex(corpus_text), 0};
    Corpus corpus = parse_vertical_corpus_text(corpus_text, options.corpus_path);
    corpus_text.clear();
    corpus_text.shrink_to_fit();

    std::string chunking_text = read_input(options.chunking_path);
    echo.chunking =
        InputDigest{base_name(options.chunking_path), fnv1a64_hex(chunking_text), 0};
    std::istringstream chunking_in(chunking_text);
    ChunkingConfig config = ChunkingConfig::parse(chunking_in, options.chunking_path);

    std::string patterns_text = read_input(options.patterns_path);
    std::istringstream patterns_in(patterns_text);
    PatternSet patterns = PatternSet::parse(patterns_in, options.patterns_path);
    echo.patterns = InputDigest{base_name(options.patterns_path), fnv1a64_hex(patterns_text),
                                patterns.size()};

    std::vector<Terminology> loaded;
    std::vector<const Terminology*> parts;
    for (const std::string& path : options.terminology_paths) {
        std::string text = read_input(path);
        std::istringstream in(text);
        loaded.push_back(
            Terminology::parse(in, path, base_name(path), options.case_sensitive_terms));
        echo.terminologies.push_back(
            InputDigest{base_name(path), fnv1a64_hex(text), loaded.back().size()});
    }
    for (const Terminology& t : loaded) parts.push_back(&t);
    Terminology terminology;
    if (!parts.empty()) terminology = Terminology::merge(parts);

    std::vector<SentenceChunks> chunks =
        chunk_corpus(corpus, config, terminology, options.threads);
    std::size_t corrected = 0;
    for (const SentenceChunks& sentence : chunks)
        corrected += static_cast<std::size_t>(sentence.corrected_words);
    std::vector<MnpType> types = collect_mnp_types(chunks);
    chunks.clear();
    chunks.shrink_to_fit();

    ParserOptions parser_options;
    parser_options.non_deterministic = options.non_deterministic;
    parser_options.islands.noncontiguous = options.noncontiguous_islands;
    parser_options.islands.gap_limit = options.island_gap_limit;
    parser_options.fixpoint_islands = options.fixpoint_islands;
    parser_options.case_sensitive_terms = options.case_sensitive_terms;
    parser_options.threads = options.threads;
    ParsingOutcome outcome = run_parsing(types, terminology, patterns, parser_options);

    std::vector<TermCandidate> candidates = build_term_candidates(types, outcome);
    rank_candidates(candidates, types);

    RunSummary summary;
    summary.chunking = compute_chunking_stats(types, corpus, corrected);
    summary.parsing = compute_parsing_stats(types, outcome, terminology);
    summary.report = make_report(summary.chunking, summary.parsing, corpus, echo);

    emit_outputs(options.out_dir, candidates, types, outcome, summary.report);

    if (summary_out) print_summary(summary, *summary_out);
    return summary;
}

void print_summary(const RunSummary& summary, std::ostream& out) {
    const ChunkingStats& c = summary.chunking;
    const ParsingStats& p = summary.parsing;
    out << "chunking:\n";
    out << "  MNP types / occurrences:          " << c.mnp_types << " / "
        << c.mnp_occurrences << "\n";
    out << "  monolexical types / occurrences:  " << c.monolexical_types << " / "
        << c.monolexical_occurrences << "\n";
    out << "  words per complex MNP:            " << std::fixed << std::setprecision(2)
        << c.words_per_complex_mnp << " (by type " << c.words_per_complex_mnp_by_type
        << ")\n";
    out << "  POS sequence types:               " << c.pos_sequence_types << "\n";
    out << "  tag-corrected words:              " << c.tag_corrected_words << "\n";
    out.unsetf(std::ios::fixed);
    out << "parsing (types / occurrences):\n";
    out << "  tt-covered:       " << p.tt_covered.types << " / " << p.tt_covered.occurrences
        << "\n";
    out << "  pattern-covered:  " << p.pattern_covered.types << " / "
        << p.pattern_covered.occurrences << "\n";
    out << "  progressive:      " << p.progressive.types << " / "
        << p.progressive.occurrences << "\n";
    out << "  unparsed:         " << p.unparsed.types << " / " << p.unparsed.occurrences
        << "\n";
    out << "  terminology usage: " << p.terms_used << " of " << p.terms_total
        << " terms\n";
}

int run_pipeline(const RunOptions& options, std::ostream& out, std::ostream& err) {
    try {
        run_pipeline_or_throw(options, &out);
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

double metric(const nlohmann::json& report, const char* section, const char* name) {
    return report.at(section).at(name).get<double>();
}

double method_metric(const nlohmann::json& report, const char* method, const char* unit) {
    return report.at("parsing").at(method).at(unit).get<double>();
}

} // namespace

CompareResult compare_reports(const nlohmann::json& report_a,
                              const nlohmann::json& report_b) {
    const std::string hash_a = report_a.at("inputs").at("corpus").at("hash").get<std::string>();
    const std::string hash_b = report_b.at("inputs").at("corpus").at("hash").get<std::string>();
    if (hash_a != hash_b)
        throw std::invalid_argument("reports come from different corpora (hash " + hash_a +
                                    " vs " + hash_b + ")");

    CompareResult result;
    auto add = [&](const std::string& name, double a, double b, bool integral) {
        result.rows.push_back(MetricDelta{name, a, b, integral});
    };
    add("MNP types", metric(report_a, "chunking", "mnp_types"),
        metric(report_b, "chunking", "mnp_types"), true);
    add("MNP occurrences", metric(report_a, "chunking", "mnp_occurrences"),
        metric(report_b, "chunking", "mnp_occurrences"), true);
    add("monolexical types", metric(report_a, "chunking", "monolexical_types"),
        metric(report_b, "chunking", "monolexical_types"), true);
    add("monolexical occurrences", metric(report_a, "chunking", "monolexical_occurrences"),
        metric(report_b, "chunking", "monolexical_occurrences"), true);
    add("words/complex MNP", metric(report_a, "chunking", "words_per_complex_mnp"),
        metric(report_b, "chunking", "words_per_complex_mnp"), false);
    add("POS sequence types", metric(report_a, "chunking", "pos_sequence_types"),
        metric(report_b, "chunking", "pos_sequence_types"), true);
    for (const char* method : {"tt_covered", "pattern_covered", "progressive", "unparsed"}) {
        for (const char* unit : {"types", "occurrences"}) {
            add(std::string(method) + " " + unit, method_metric(report_a, method, unit),
                method_metric(report_b, method, unit), true);
        }
    }
    add("terms used", report_a.at("parsing").at("terminology").at("terms_used").get<double>(),
        report_b.at("parsing").at("terminology").at("terms_used").get<double>(), true);
    return result;
}

void print_compare(const CompareResult& result, std::ostream& out) {
    out << std::left << std::setw(28) << "metric" << std::right << std::setw(12) << "a"
        << std::setw(12) << "b" << std::setw(12) << "delta" << "\n";
    for (const MetricDelta& row : result.rows) {
        out << std::left << std::setw(28) << row.name << std::right;
        if (row.integral) {
            out << std::setw(12) << static_cast<long long>(row.a) << std::setw(12)
                << static_cast<long long>(row.b);
            long long delta = static_cast<long long>(row.b) - static_cast<long long>(row.a);
            std::ostringstream d;
            if (delta >= 0) d << '+';
            d << delta;
            out << std::setw(12) << d.str();
        } else {
            out << std::fixed << std::setprecision(2);
            out << std::setw(12) << row.a << std::setw(12) << row.b;
            std::ostringstream d;
            d << std::fixed << std::setprecision(2);
            if (row.delta() >= 0) d << '+';
            d << row.delta();
            out << std::setw(12) << d.str();
            out.unsetf(std::ios::fixed);
        }
        out << "\n";
    }
}

int compare_runs(const std::string& report_path_a, const std::string& report_path_b,
                 std::ostream& out, std::ostream& err) {
    try {
        nlohmann::json a;
        nlohmann::json b;
        try {
            a = nlohmann::json::parse(read_text_file(report_path_a));
            b = nlohmann::json::parse(read_text_file(report_path_b));
        } catch (const nlohmann::json::parse_error& e) {
            err << "error: invalid report: " << e.what() << "\n";
            return 1;
        }
        CompareResult result = compare_reports(a, b);
        print_compare(result, out);
        return 0;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace termex
