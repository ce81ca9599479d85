#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "termex/extractor.hpp"
#include "termex/text_util.hpp"

using namespace termex;

namespace {

PatternSet patterns_from(const std::string& text) {
    std::istringstream in(text);
    return PatternSet::parse(in, "pat");
}

Terminology terms_from(const std::string& text) {
    std::istringstream in(text);
    return Terminology::parse(in, "terms", "src");
}

MnpType type_of(std::initializer_list<std::array<const char*, 3>> tokens, int copies = 1) {
    MnpType type;
    MnpOccurrence occ;
    std::string inflected;
    std::string lemmas;
    for (const auto& t : tokens) {
        if (!occ.words.empty()) {
            inflected += ' ';
            lemmas += ' ';
        }
        inflected += fold_case(t[0]);
        lemmas += fold_case(t[2]);
        type.pos_sequence.emplace_back(t[1]);
        occ.words.push_back(TaggedWord{t[0], t[1], t[2], static_cast<int>(occ.words.size())});
    }
    occ.end = static_cast<int>(occ.words.size());
    type.inflected_key = std::move(inflected);
    type.lemma_key = std::move(lemmas);
    for (int i = 0; i < copies; ++i) type.occurrences.push_back(occ);
    return type;
}

std::string slurp(const std::filesystem::path& path) {
    return read_text_file(path.string());
}

} // namespace

TEST_CASE("no parsed types, no candidates") {
    std::vector<MnpType> types;
    types.push_back(type_of({{"growth", "NN", "growth"}}));
    ParsingOutcome outcome;
    outcome.by_type.resize(1);
    CHECK(build_term_candidates(types, outcome).empty());
}

TEST_CASE("candidates carry the head lemma of the best parse") {
    PatternSet patterns = patterns_from("(NNS NN<h>)\n");
    Terminology terms;
    std::vector<MnpType> types;
    types.push_back(type_of({{"Genes", "NNS", "gene"}, {"expression", "NN", "expression"}}, 3));
    ParsingOutcome outcome = run_parsing_serial(types, terms, patterns, {});
    auto candidates = build_term_candidates(types, outcome);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].head_lemma == "expression");
    CHECK(candidates[0].best_reliability == 2);
    CHECK(candidates[0].frequency == 3);
}

TEST_CASE("best reliability is the max over a candidate's parses") {
    std::vector<MnpType> types;
    types.push_back(type_of({{"cell", "NN", "cell"}, {"wall", "NN", "wall"}}, 2));
    ParsingOutcome outcome;
    outcome.by_type.resize(1);
    ParseResult progressive;
    progressive.tree = ParseTree::branch(ParseTree::leaf(0), ParseTree::leaf(1), true);
    progressive.method = ParseMethod::Progressive;
    progressive.reliability = reliability_score(ParseMethod::Progressive);
    ParseResult pattern;
    pattern.tree = ParseTree::branch(ParseTree::leaf(0), ParseTree::leaf(1), false);
    pattern.method = ParseMethod::PatternCovered;
    pattern.reliability = reliability_score(ParseMethod::PatternCovered);
    outcome.by_type[0].push_back(progressive);
    outcome.by_type[0].push_back(pattern);

    auto candidates = build_term_candidates(types, outcome);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].best_reliability == 2);
    // head lemma follows the highest-reliability parse, not the first one
    CHECK(candidates[0].head_lemma == "wall");
}

TEST_CASE("ranking: reliability, then frequency, then lemma key") {
    std::vector<MnpType> types;
    types.push_back(type_of({{"alpha", "NN", "alpha"}, {"site", "NN", "site"}}, 2));   // 0
    types.push_back(type_of({{"beta", "NN", "beta"}, {"site", "NN", "site"}}, 7));    // 1
    types.push_back(type_of({{"gamma", "NN", "gamma"}, {"site", "NN", "site"}}, 7));  // 2
    types.push_back(type_of({{"delta", "NN", "delta"}, {"site", "NN", "site"}}, 1));  // 3

    auto result_of = [&](std::size_t index, ParseMethod method) {
        TermCandidate c;
        c.type_index = index;
        ParseResult r;
        r.tree = ParseTree::branch(ParseTree::leaf(0), ParseTree::leaf(1), false);
        r.method = method;
        r.reliability = reliability_score(method);
        c.parses.push_back(r);
        c.best_reliability = r.reliability;
        c.frequency = types[index].frequency();
        c.head_lemma = "site";
        return c;
    };
    std::vector<TermCandidate> candidates;
    candidates.push_back(result_of(0, ParseMethod::Progressive));
    candidates.push_back(result_of(1, ParseMethod::PatternCovered));
    candidates.push_back(result_of(2, ParseMethod::PatternCovered));
    candidates.push_back(result_of(3, ParseMethod::TtCovered));
    rank_candidates(candidates, types);

    CHECK(candidates[0].type_index == 3); // reliability 3 first
    CHECK(candidates[1].type_index == 1); // freq 7, "beta site" < "gamma site"
    CHECK(candidates[2].type_index == 2);
    CHECK(candidates[3].type_index == 0); // progressive last
}

TEST_CASE("chunking stats on an empty table are all zero with the mean undefined") {
    Corpus corpus;
    ChunkingStats stats = compute_chunking_stats({}, corpus, 0);
    CHECK(stats.mnp_types == 0);
    CHECK(stats.mnp_occurrences == 0);
    CHECK(stats.words_per_complex_mnp == 0.0);
    CHECK_FALSE(stats.words_per_complex_mnp_defined);
}

TEST_CASE("chunking stats count types, occurrences and POS sequences") {
    Corpus corpus;
    std::vector<MnpType> types;
    types.push_back(type_of({{"sigma", "NN", "sigma"}, {"factor", "NN", "factor"}}, 5));
    types.push_back(type_of({{"growth", "NN", "growth"}}, 6));
    types.push_back(type_of(
        {{"novel", "JJ", "novel"}, {"sigma", "NN", "sigma"}, {"factor", "NN", "factor"}}, 1));
    types.push_back(type_of({{"cell", "NN", "cell"}, {"wall", "NN", "wall"}}, 2));
    ChunkingStats stats = compute_chunking_stats(types, corpus, 4);
    CHECK(stats.mnp_types == 4);
    CHECK(stats.mnp_occurrences == 14);
    CHECK(stats.monolexical_types == 1);
    CHECK(stats.monolexical_occurrences == 6);
    CHECK(stats.complex_mnp_occurrences == 8);
    CHECK(stats.complex_mnp_words == 2 * 5 + 3 * 1 + 2 * 2);
    CHECK(stats.words_per_complex_mnp == doctest::Approx(2.13)); // 17/8 rounded
    CHECK(stats.words_per_complex_mnp_by_type == doctest::Approx(2.33));
    CHECK(stats.pos_sequence_types == 2); // "NN NN" and "JJ NN NN"
    CHECK(stats.tag_corrected_words == 4);
}

TEST_CASE("parsing stats partition multi-word types and track terminology usage") {
    PatternSet patterns = patterns_from("(NN NN<h>)\n");
    Terminology terms = terms_from(
        "sigma factor\tNN NN\t-\t(0 1<h>)\ncell wall\tNN NN\t-\t-\nunused term\tNN NN\t-\t-\n");
    std::vector<MnpType> types;
    types.push_back(type_of({{"sigma", "NN", "sigma"}, {"factor", "NN", "factor"}}, 4));
    types.push_back(type_of({{"gene", "NN", "gene"}, {"expression", "NN", "expression"}}, 2));
    types.push_back(type_of({{"strain", "NN", "strain"}, {"specific", "JJ", "specific"}}, 2));
    types.push_back(type_of({{"growth", "NN", "growth"}}, 9));
    ParsingOutcome outcome = run_parsing_serial(types, terms, patterns, {});
    ParsingStats stats = compute_parsing_stats(types, outcome, terms);
    CHECK(stats.tt_covered.types == 1);
    CHECK(stats.tt_covered.occurrences == 4);
    CHECK(stats.pattern_covered.types == 1);
    CHECK(stats.pattern_covered.occurrences == 2);
    CHECK(stats.progressive.types == 0);
    CHECK(stats.unparsed.types == 1);
    CHECK(stats.unparsed.occurrences == 2);
    CHECK(stats.tt_covered.types + stats.pattern_covered.types + stats.progressive.types +
              stats.unparsed.types ==
          3); // multi-word types only
    CHECK(stats.terms_used == 1);
    CHECK(stats.terms_total == 3);
}

TEST_CASE("emit_outputs writes headers-only files for an empty run") {
    Corpus corpus;
    ParsingOutcome outcome;
    RunConfigEcho echo;
    echo.corpus = {"c.vrt", "00", 0};
    echo.chunking = {"c.conf", "00", 0};
    echo.patterns = {"p.pat", "00", 0};
    auto report = make_report(ChunkingStats{}, ParsingStats{}, corpus, echo);
    auto dir = std::filesystem::temp_directory_path() / "termex_extractor_empty";
    std::filesystem::remove_all(dir);
    emit_outputs(dir.string(), {}, {}, outcome, report);
    CHECK(slurp(dir / "candidates.tsv") ==
          "lemma_key\tinflected_key\thead_lemma\tparse\tmethod\treliability\tfrequency\n");
    CHECK(slurp(dir / "unparsed.tsv") == "inflected_key\tpos_sequence\tfrequency\n");
    CHECK(slurp(dir / "monolexical.tsv") == "inflected_key\tpos_sequence\tfrequency\n");
    CHECK(nlohmann::json::parse(slurp(dir / "report.json"))["chunking"]["mnp_types"] == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("emit_outputs is byte-identical across reruns") {
    PatternSet patterns = patterns_from("(NN NN<h>)\n");
    Terminology terms;
    std::vector<MnpType> types;
    types.push_back(type_of({{"cell", "NN", "cell"}, {"wall", "NN", "wall"}}, 2));
    types.push_back(type_of({{"growth", "NN", "growth"}}, 3));
    types.push_back(type_of({{"strain", "NN", "strain"}, {"specific", "JJ", "specific"}}));
    ParsingOutcome outcome = run_parsing_serial(types, terms, patterns, {});
    auto candidates = build_term_candidates(types, outcome);
    rank_candidates(candidates, types);
    Corpus corpus;
    RunConfigEcho echo;
    echo.corpus = {"c.vrt", "beef", 0};
    echo.chunking = {"c.conf", "beef", 0};
    echo.patterns = {"p.pat", "beef", 1};
    auto report = make_report(compute_chunking_stats(types, corpus, 0),
                              compute_parsing_stats(types, outcome, terms), corpus, echo);

    auto dir_a = std::filesystem::temp_directory_path() / "termex_extractor_a";
    auto dir_b = std::filesystem::temp_directory_path() / "termex_extractor_b";
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
    emit_outputs(dir_a.string(), candidates, types, outcome, report);
    emit_outputs(dir_b.string(), candidates, types, outcome, report);
    for (const char* name : {"candidates.tsv", "unparsed.tsv", "monolexical.tsv", "report.json"})
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));

    // partition: every multi-word type is in exactly one of the two lists
    std::string cand_text = slurp(dir_a / "candidates.tsv");
    std::string unparsed_text = slurp(dir_a / "unparsed.tsv");
    CHECK(cand_text.find("cell wall") != std::string::npos);
    CHECK(cand_text.find("strain specific") == std::string::npos);
    CHECK(unparsed_text.find("strain specific") != std::string::npos);
    CHECK(unparsed_text.find("cell wall") == std::string::npos);
    CHECK(slurp(dir_a / "monolexical.tsv").find("growth") != std::string::npos);
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
}

TEST_CASE("parse serialization uses folded surfaces with head marks") {
    std::vector<MnpType> types;
    types.push_back(type_of({{"DNA", "NNP", "dna"}, {"binding", "NN", "binding"}}));
    ParseTree tree = ParseTree::branch(ParseTree::leaf(0), ParseTree::leaf(1), false);
    CHECK(serialize_parse_over_type(tree, types[0]) == "(dna binding<h>)");
}
