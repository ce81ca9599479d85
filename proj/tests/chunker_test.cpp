#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "termex/chunker.hpp"
#include "termex/chunking_config.hpp"
#include "termex/corpus.hpp"
#include "termex/terminology.hpp"

using namespace termex;

namespace {

Sentence sentence_of(std::initializer_list<std::array<const char*, 3>> tokens, int id = 0) {
    Sentence s;
    s.id = id;
    for (const auto& t : tokens) {
        TaggedWord w{t[0], t[1], t[2], static_cast<int>(s.words.size())};
        s.words.push_back(std::move(w));
    }
    return s;
}

Terminology terms_from(const std::string& text) {
    std::istringstream in(text);
    return Terminology::parse(in, "terms", "src");
}

ChunkingConfig default_config() {
    std::ifstream in(TERMEX_DATA_DIR "/chunking/penn.conf");
    REQUIRE(in.good());
    return ChunkingConfig::parse(in, "penn.conf");
}

std::vector<std::string> surfaces(const MnpOccurrence& mnp) {
    std::vector<std::string> out;
    for (const TaggedWord& w : mnp.words) out.push_back(w.surface);
    return out;
}

} // namespace

TEST_CASE("determiners and verbs delimit MNPs") {
    ChunkingConfig cfg = default_config();
    Sentence s = sentence_of({{"the", "DT", "the"},
                              {"sigma", "NN", "sigma"},
                              {"factor", "NN", "factor"},
                              {"binds", "VBZ", "bind"},
                              {"the", "DT", "the"},
                              {"promoter", "NN", "promoter"}});
    auto mnps = chunk_sentence(s, cfg, {});
    REQUIRE(mnps.size() == 2);
    CHECK(surfaces(mnps[0]) == std::vector<std::string>{"sigma", "factor"});
    CHECK(surfaces(mnps[1]) == std::vector<std::string>{"promoter"});
    CHECK(mnps[0].start == 1);
    CHECK(mnps[0].end == 3);
}

TEST_CASE("of passes the preposition frontier") {
    ChunkingConfig cfg = default_config();
    Sentence s = sentence_of({{"expression", "NN", "expression"},
                              {"of", "IN", "of"},
                              {"cotD", "NN", "cotd"},
                              {"depends", "VBZ", "depend"},
                              {"on", "IN", "on"},
                              {"sigB", "NN", "sigb"}});
    auto mnps = chunk_sentence(s, cfg, {});
    REQUIRE(mnps.size() == 2);
    CHECK(surfaces(mnps[0]) == std::vector<std::string>{"expression", "of", "cotD"});
    CHECK(surfaces(mnps[1]) == std::vector<std::string>{"sigB"});
}

TEST_CASE("forbidden structures are cut out of their chunk") {
    ChunkingConfig cfg = default_config();
    Sentence s = sentence_of({{"it", "PRP", "it"},
                              {"is", "VBZ", "be"},
                              {"a", "DT", "a"},
                              {"matter", "NN", "matter"},
                              {"of", "IN", "of"},
                              {"course", "NN", "course"}});
    auto mnps = chunk_sentence(s, cfg, {});
    REQUIRE(mnps.size() == 1);
    CHECK(surfaces(mnps[0]) == std::vector<std::string>{"matter"});
}

TEST_CASE("protected spans admit otherwise-frontier tags") {
    ChunkingConfig cfg = default_config();
    Terminology t = terms_from("in vitro\tIN FW\t-\t-\n");
    Sentence s = sentence_of({{"in", "IN", "in"},
                              {"vitro", "FW", "vitro"},
                              {"binding", "NN", "binding"},
                              {"occurs", "VBZ", "occur"}});

    auto without = chunk_sentence(s, cfg, {});
    REQUIRE(without.size() == 1);
    CHECK(surfaces(without[0]) == std::vector<std::string>{"binding"});

    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].start == 0);
    CHECK(spans[0].end == 2);
    auto with = chunk_sentence(s, cfg, spans);
    REQUIRE(with.size() == 1);
    CHECK(surfaces(with[0]) == std::vector<std::string>{"in", "vitro", "binding"});
    REQUIRE(with[0].protected_subspans.size() == 1);
    CHECK(with[0].protected_subspans[0].term_id == spans[0].term_id);
}

TEST_CASE("testified occurrences: longest match wins, then leftmost") {
    Terminology t = terms_from("gene expression\tNN NN\t-\t-\nexpression level\tNN NN\t-\t-\n");
    Sentence s = sentence_of({{"gene", "NN", "gene"},
                              {"expression", "NN", "expression"},
                              {"level", "NN", "level"}});
    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].start == 0);
    CHECK(spans[0].end == 2);
    CHECK(t.term(spans[0].term_id).surface_words[0] == "gene");
}

TEST_CASE("longer term beats its own prefix") {
    Terminology t =
        terms_from("heat shock\tNN NN\t-\t-\nheat shock response\tNN NN NN\t-\t-\n");
    Sentence s = sentence_of({{"heat", "NN", "heat"},
                              {"shock", "NN", "shock"},
                              {"response", "NN", "response"}});
    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].end - spans[0].start == 3);
}

TEST_CASE("lemma-key matches locate inflected occurrences") {
    Terminology t = terms_from("binding sites\t-\tbinding site\t-\n");
    Sentence s = sentence_of({{"Binding", "NN", "binding"}, {"site", "NN", "site"}});
    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 1);
}

TEST_CASE("empty terminology locates nothing") {
    Terminology t;
    Sentence s = sentence_of({{"gene", "NN", "gene"}});
    CHECK(locate_testified_occurrences(s, t).empty());
}

TEST_CASE("tag and lemma corrections come from the term") {
    Terminology t = terms_from("DNA binding\tNN NN\tdna binding\t-\n");
    Sentence s = sentence_of({{"DNA", "NNP", "dna"},
                              {"binding", "VBG", "bind"},
                              {"inhibits", "VBZ", "inhibit"},
                              {"growth", "NN", "growth"}});
    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 1);
    int corrected = 0;
    Sentence fixed = apply_tag_corrections(s, spans, t, &corrected);
    CHECK(corrected == 2);
    CHECK(fixed.words[0].pos == "NN");
    CHECK(fixed.words[1].pos == "NN");
    CHECK(fixed.words[1].lemma == "binding");
    CHECK(fixed.words[2].pos == "VBZ"); // outside the span, untouched
    CHECK(s.words[0].pos == "NNP");     // input sentence not mutated
}

TEST_CASE("a term without tags corrects nothing") {
    Terminology t = terms_from("gene expression\t-\t-\t-\n");
    Sentence s = sentence_of({{"gene", "NN", "gene"}, {"expression", "NN", "expression"}});
    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 1);
    int corrected = 0;
    Sentence fixed = apply_tag_corrections(s, spans, t, &corrected);
    CHECK(corrected == 0);
    CHECK(fixed == s);
}

TEST_CASE("two disjoint spans are corrected independently") {
    Terminology t = terms_from("cell wall\tNN NN\tcell wall\t-\nstress response\tNN NN\tstress response\t-\n");
    Sentence s = sentence_of({{"cell", "NNP", "cell"},
                              {"wall", "NN", "wall"},
                              {"stress", "NN", "stress"},
                              {"response", "VBG", "response"}});
    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 2);
    int corrected = 0;
    Sentence fixed = apply_tag_corrections(s, spans, t, &corrected);
    CHECK(corrected == 2);
    CHECK(fixed.words[0].pos == "NN");
    CHECK(fixed.words[3].pos == "NN");
}

TEST_CASE("type collection groups by folded key and flags POS divergence") {
    ChunkingConfig cfg = default_config();
    Terminology t;
    Corpus corpus = parse_vertical_corpus_text(
        "the\tDT\tthe\nspore\tNN\tspore\ncoat\tNN\tcoat\n\n"
        "Spore\tNNP\tspore\ncoat\tNN\tcoat\n\n"
        "the\tDT\tthe\nspore\tNN\tspore\ncoat\tNN\tcoat\n\n",
        "t");
    auto chunks = chunk_corpus_serial(corpus, cfg, t);
    auto types = collect_mnp_types(chunks);
    REQUIRE(types.size() == 1);
    CHECK(types[0].inflected_key == "spore coat");
    CHECK(types[0].frequency() == 3);
    CHECK(types[0].pos_sequence == std::vector<std::string>{"NN", "NN"});
    CHECK(types[0].pos_divergent);
    CHECK_FALSE(types[0].is_monolexical());
}

TEST_CASE("zero occurrences give an empty type table") {
    CHECK(collect_mnp_types({}).empty());
}

TEST_CASE("chunking with an unused terminology equals chunking with none") {
    ChunkingConfig cfg = default_config();
    Terminology unused = terms_from("flux capacitor\tNN NN\t-\t-\n");
    Terminology none;
    Corpus corpus = parse_vertical_corpus_text(
        "the\tDT\tthe\nsigma\tNN\tsigma\nfactor\tNN\tfactor\nbinds\tVBZ\tbind\n\n"
        "growth\tNN\tgrowth\nstops\tVBZ\tstop\n\n",
        "t");
    auto with = chunk_corpus_serial(corpus, cfg, unused);
    auto without = chunk_corpus_serial(corpus, cfg, none);
    REQUIRE(with.size() == without.size());
    for (std::size_t i = 0; i < with.size(); ++i) {
        REQUIRE(with[i].mnps.size() == without[i].mnps.size());
        for (std::size_t j = 0; j < with[i].mnps.size(); ++j)
            CHECK(with[i].mnps[j].words == without[i].mnps[j].words);
    }
}

TEST_CASE("a single-word testified term admits an otherwise-frontier word") {
    ChunkingConfig cfg = default_config();
    Terminology t = terms_from("lacZ\tFW\tlacz\t-\n");
    Sentence s = sentence_of({{"the", "DT", "the"},
                              {"lacZ", "FW", "lacz"},
                              {"operon", "NN", "operon"},
                              {"is", "VBZ", "be"},
                              {"induced", "VBN", "induce"}});
    auto without = chunk_sentence(s, cfg, {});
    REQUIRE(without.size() == 1);
    CHECK(surfaces(without[0]) == std::vector<std::string>{"operon"});

    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 1);
    auto with = chunk_sentence(s, cfg, spans);
    REQUIRE(with.size() == 1);
    CHECK(surfaces(with[0]) == std::vector<std::string>{"lacZ", "operon"});
}

TEST_CASE("protection outranks forbidden structures") {
    ChunkingConfig cfg = default_config();
    Terminology t = terms_from("of course\tIN NN\t-\t-\n");
    Sentence s = sentence_of({{"a", "DT", "a"},
                              {"matter", "NN", "matter"},
                              {"of", "IN", "of"},
                              {"course", "NN", "course"}});
    auto spans = locate_testified_occurrences(s, t);
    REQUIRE(spans.size() == 1);
    auto mnps = chunk_sentence(s, cfg, spans);
    REQUIRE(mnps.size() == 1);
    CHECK(surfaces(mnps[0]) == std::vector<std::string>{"matter", "of", "course"});
}
