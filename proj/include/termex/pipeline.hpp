#ifndef TERMEX_PIPELINE_HPP
#define TERMEX_PIPELINE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "termex/extractor.hpp"

#include "json.hpp"

namespace termex {

struct RunOptions {
    std::string corpus_path;
    std::string patterns_path;
    std::string chunking_path;
    std::vector<std::string> terminology_paths; // order-significant, first wins on merge
    std::string out_dir;
    bool non_deterministic = false;
    bool noncontiguous_islands = false;
    int island_gap_limit = 1;
    bool fixpoint_islands = false;
    bool case_sensitive_terms = false;
    int threads = 0; // 0 = OpenMP default, 1 = serial
};

struct RunSummary {
    ChunkingStats chunking;
    ParsingStats parsing;
    nlohmann::ordered_json report;
};

// Full pipeline: read corpus and resources, chunk, parse, extract, write
// outputs into out_dir. Throws ParseError for unreadable or malformed
// inputs and IoError for output failures. When `summary_out` is given, a
// human-readable summary is printed to it.
RunSummary run_pipeline_or_throw(const RunOptions& options, std::ostream* summary_out = nullptr);

// CLI-style wrapper: prints the summary to `out`, errors to `err`; returns
// 0 on success, 1 on input parse errors, 2 on I/O failures.
int run_pipeline(const RunOptions& options, std::ostream& out, std::ostream& err);

void print_summary(const RunSummary& summary, std::ostream& out);

// One metric row of a report comparison.
struct MetricDelta {
    std::string name;
    double a = 0.0;
    double b = 0.0;
    bool integral = true;

    double delta() const { return b - a; }
};

struct CompareResult {
    std::vector<MetricDelta> rows;
};

// Per-metric deltas between two report.json files produced from the same
// corpus. Reports with different corpus hashes throw std::invalid_argument.
CompareResult compare_reports(const nlohmann::json& report_a, const nlohmann::json& report_b);

void print_compare(const CompareResult& result, std::ostream& out);

// compare subcommand: loads both reports and prints the delta table.
// Returns 0/1/2 like run_pipeline.
int compare_runs(const std::string& report_path_a, const std::string& report_path_b,
                 std::ostream& out, std::ostream& err);

} // namespace termex

#endif
