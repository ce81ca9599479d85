#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "termex/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"termex - corpus-tuned term extraction from POS-tagged text"};
    app.get_formatter()->column_width(34);

    termex::RunOptions options;
    app.add_option("--corpus", options.corpus_path,
                   "tagged corpus in vertical format (surface<TAB>pos<TAB>lemma)");
    app.add_option("--patterns", options.patterns_path, "parsing pattern file");
    app.add_option("--chunking", options.chunking_path, "chunking configuration file");
    app.add_option("--terminology", options.terminology_paths,
                   "testified term list; repeatable, order-significant (first wins)")
        ->take_all();
    app.add_option("--out", options.out_dir, "output directory");
    app.add_flag("--non-deterministic", options.non_deterministic,
                 "keep all parses of the succeeding method, not just the first");
    app.add_flag("--noncontiguous-islands", options.noncontiguous_islands,
                 "allow order-preserving island matches with gaps");
    app.add_option("--gap-limit", options.island_gap_limit,
                   "max skipped words in a non-contiguous island match (default 1)");
    app.add_flag("--fixpoint-islands", options.fixpoint_islands,
                 "re-harvest islands until no new type parses");
    app.add_flag("--case-sensitive-terms", options.case_sensitive_terms,
                 "match testified terms with exact case");
    app.add_option("--threads", options.threads, "worker threads (1 = serial, 0 = default)");

    auto* compare = app.add_subcommand("compare", "diff two report.json files metric by metric");
    std::string report_a;
    std::string report_b;
    compare->add_option("report_a", report_a, "first report.json")->required();
    compare->add_option("report_b", report_b, "second report.json")->required();

    CLI11_PARSE(app, argc, argv);

    if (*compare) return termex::compare_runs(report_a, report_b, std::cout, std::cerr);

    for (const auto& [flag, value] :
         {std::pair<const char*, const std::string*>{"--corpus", &options.corpus_path},
          {"--patterns", &options.patterns_path},
          {"--chunking", &options.chunking_path},
          {"--out", &options.out_dir}}) {
        if (value->empty()) {
            std::cerr << "error: missing required option " << flag << "\n";
            std::cerr << app.help();
            return 1;
        }
    }

    return termex::run_pipeline(options, std::cout, std::cerr);
}
