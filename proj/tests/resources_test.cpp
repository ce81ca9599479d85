#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "termex/chunking_config.hpp"
#include "termex/errors.hpp"
#include "termex/pattern_set.hpp"
#include "termex/terminology.hpp"

using namespace termex;

namespace {

ChunkingConfig config_from(const std::string& text) {
    std::istringstream in(text);
    return ChunkingConfig::parse(in, "cfg");
}

PatternSet patterns_from(const std::string& text) {
    std::istringstream in(text);
    return PatternSet::parse(in, "pat");
}

Terminology terms_from(const std::string& text, const std::string& source = "src",
                       bool case_sensitive = false) {
    std::istringstream in(text);
    return Terminology::parse(in, "terms", source, case_sensitive);
}

TaggedWord word(const std::string& surface, const std::string& pos,
                const std::string& lemma) {
    return TaggedWord{surface, pos, lemma, 0};
}

} // namespace

TEST_CASE("frontier tag with word exception") {
    ChunkingConfig cfg = config_from("frontier pos IN\nallow word of pos IN\n");
    CHECK(cfg.is_frontier(word("on", "IN", "on")));
    CHECK_FALSE(cfg.is_frontier(word("of", "IN", "of")));
    // lemma-based matching survives capitalization
    CHECK_FALSE(cfg.is_frontier(word("Of", "IN", "of")));
}

TEST_CASE("allowed tag with forbidden words") {
    ChunkingConfig cfg = config_from("forbid word many pos JJ\nforbid word several pos JJ\n");
    CHECK(cfg.is_frontier(word("many", "JJ", "many")));
    CHECK(cfg.is_frontier(word("several", "JJ", "several")));
    CHECK_FALSE(cfg.is_frontier(word("novel", "JJ", "novel")));
}

TEST_CASE("allow on a non-frontier tag is an error") {
    try {
        config_from("allow word of pos IN\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
}

TEST_CASE("a word cannot be both allowed and forbidden for one tag") {
    CHECK_THROWS_AS(
        config_from("frontier pos JJ\nallow word odd pos JJ\nforbid word odd pos JJ\n"),
        ParseError);
    CHECK_THROWS_AS(
        config_from("frontier pos JJ\nforbid word odd pos JJ\nallow word odd pos JJ\n"),
        ParseError);
}

TEST_CASE("unknown directives and malformed structures are errors") {
    CHECK_THROWS_AS(config_from("fronteer pos IN\n"), ParseError);
    CHECK_THROWS_AS(config_from("forbidden-structure of_IN\n"), ParseError);
    CHECK_THROWS_AS(config_from("forbidden-structure */*\n"), ParseError);
}

TEST_CASE("frontier words and surface-mode rules") {
    ChunkingConfig cfg = config_from(
        "frontier word etc\nfrontier word Figure pos NN surface\n");
    CHECK(cfg.is_frontier(word("etc", "NN", "etc")));
    CHECK(cfg.is_frontier(word("Etc", "FW", "etc"))); // any tag, lemma match
    CHECK(cfg.is_frontier(word("Figure", "NN", "figure")));
    CHECK_FALSE(cfg.is_frontier(word("figure", "NN", "figure"))); // exact surface
}

TEST_CASE("forbidden structure tokens match word and tag constraints") {
    ChunkingConfig cfg = config_from("forbidden-structure of/IN course/NN\n");
    REQUIRE(cfg.forbidden_structures().size() == 1);
    const ForbiddenStructure& fs = cfg.forbidden_structures()[0];
    REQUIRE(fs.tokens.size() == 2);
    CHECK(fs.tokens[0].matches(word("of", "IN", "of")));
    CHECK(fs.tokens[0].matches(word("Of", "IN", "of")));
    CHECK_FALSE(fs.tokens[0].matches(word("of", "NN", "of")));
    CHECK(fs.tokens[1].matches(word("course", "NN", "course")));
    CHECK_FALSE(fs.tokens[1].matches(word("courses", "NNS", "curse")));

    ChunkingConfig wild = config_from("forbidden-structure */DT fact/*\n");
    const ForbiddenStructure& ws = wild.forbidden_structures()[0];
    CHECK(ws.tokens[0].matches(word("every", "DT", "every")));
    CHECK(ws.tokens[1].matches(word("fact", "NN", "fact")));
    CHECK(ws.tokens[1].matches(word("facts", "NNS", "fact"))); // lemma side matches
}

TEST_CASE("two-leaf pattern with right head") {
    PatternSet set = patterns_from("(JJ NN<h>)\n");
    REQUIRE(set.size() == 1);
    const ParsingPattern& p = set.patterns()[0];
    CHECK(p.leaf_count() == 2);
    CHECK(p.leaves()[0].tag == "JJ");
    CHECK(p.leaves()[1].tag == "NN");
    CHECK(p.shape().head_leaf() == 1);
    CHECK(p.content_word_count() == 2);
    CHECK(p.tag_key() == "JJ NN");
}

TEST_CASE("left-grouped three-leaf pattern") {
    PatternSet set = patterns_from("((NN<h> NN) NN<h>)\n");
    const ParsingPattern& p = set.patterns()[0];
    CHECK(p.leaf_count() == 3);
    CHECK(p.shape().head_leaf() == 2);
    CHECK(p.shape().leaves() == std::vector<int>{0, 1, 2});
}

TEST_CASE("lemma anchors fold case and do not count as content") {
    PatternSet set = patterns_from("(NN<h> (IN=Of NN<h>))\n");
    const ParsingPattern& p = set.patterns()[0];
    CHECK(p.leaves()[1].tag == "IN");
    CHECK(p.leaves()[1].lemma == "of");
    CHECK(p.content_word_count() == 2);
    CHECK(p.tag_key() == "NN IN NN");
}

TEST_CASE("pattern syntax errors carry line numbers") {
    CHECK_THROWS_AS(patterns_from("(JJ NN<h>\n"), ParseError);       // unbalanced
    CHECK_THROWS_AS(patterns_from("(JJ NN)\n"), ParseError);         // zero heads
    CHECK_THROWS_AS(patterns_from("(JJ<h> NN<h>)\n"), ParseError);   // two heads
    CHECK_THROWS_AS(patterns_from("(JJ NN NN<h>)\n"), ParseError);   // not binary
    CHECK_THROWS_AS(patterns_from("(NN<h>)\n"), ParseError);         // one leaf
    try {
        patterns_from("(JJ NN<h>)\n(JJ NN<h>)\n");
        FAIL("expected duplicate error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("same tag sequence with different trees or anchors is not a duplicate") {
    PatternSet set = patterns_from("((NN<h> NN) NN<h>)\n((NN NN<h>) NN<h>)\n");
    CHECK(set.size() == 2);
    CHECK(set.candidates("NN NN NN").size() == 2);
    // file order preserved
    CHECK(set.candidates("NN NN NN")[0] == 0);
}

TEST_CASE("every pattern is reachable from the index under its own tag key") {
    std::ifstream in(TERMEX_DATA_DIR "/patterns/penn-80.pat");
    REQUIRE(in.good());
    PatternSet set = PatternSet::parse(in, "penn-80.pat");
    CHECK(set.size() == 80);
    CHECK(set.max_leaf_count() == 4);
    for (std::size_t id = 0; id < set.size(); ++id) {
        auto ids = set.candidates(set.patterns()[id].tag_key());
        bool found = false;
        for (int i : ids)
            if (i == static_cast<int>(id)) found = true;
        CHECK(found);
        CHECK(set.patterns()[id].content_word_count() <= 3);
    }
}

TEST_CASE("terminology line with tags only") {
    Terminology t = terms_from("in vitro\tIN FW\t-\t-\n");
    REQUIRE(t.size() == 1);
    const TestifiedTerm& term = t.term(0);
    CHECK(term.surface_words == std::vector<std::string>{"in", "vitro"});
    CHECK(term.pos_tags == std::vector<std::string>{"IN", "FW"});
    CHECK(term.lemmas.empty());
    CHECK_FALSE(term.parse.has_value());
    CHECK(t.find_surface("in vitro").size() == 1);
    CHECK(t.find_lemma("in vitro").empty());
}

TEST_CASE("terminology line with explicit parse") {
    Terminology t = terms_from("gene expression\tNN NN\tgene expression\t(0 1<h>)\n");
    const TestifiedTerm& term = t.term(0);
    REQUIRE(term.parse.has_value());
    CHECK(term.parse->head_leaf() == 1);
    CHECK(t.find_lemma("gene expression").size() == 1);
}

TEST_CASE("terminology field errors carry line numbers") {
    CHECK_THROWS_AS(terms_from("gene expression\tNN\t-\t-\n"), ParseError);
    CHECK_THROWS_AS(terms_from("gene expression\t-\tgene\t-\n"), ParseError);
    CHECK_THROWS_AS(terms_from("gene expression\t-\t-\t(0 2<h>)\n"), ParseError);
    CHECK_THROWS_AS(terms_from("gene expression\t-\t-\t(0 1)\n"), ParseError);
    CHECK_THROWS_AS(terms_from("gene expression\t-\t-\n"), ParseError);
    CHECK_THROWS_AS(terms_from("one\t-\t-\t(0 1<h>)\n"), ParseError);
}

TEST_CASE("duplicates within a file keep the first entry") {
    Terminology t = terms_from("DNA binding\tNNP VBG\t-\t-\ndna binding\tNN NN\t-\t-\n");
    REQUIRE(t.size() == 1);
    CHECK(t.term(0).pos_tags == std::vector<std::string>{"NNP", "VBG"});
}

TEST_CASE("merge keeps first occurrence and is order-sensitive") {
    Terminology go = terms_from(
        "cell wall\tNN NN\t-\t(0 1<h>)\ngene expression\tNN NN\t-\t-\nspore coat\tNN NN\t-\t-\n",
        "GO");
    Terminology mesh = terms_from(
        "cell wall\tNN NN\t-\t(0<h> 1)\nheat shock\tNN NN\t-\t-\n", "MeSH");

    Terminology merged = Terminology::merge({&go, &mesh});
    CHECK(merged.size() == 4);
    REQUIRE(merged.find_surface("cell wall").size() == 1);
    const TestifiedTerm& cw = merged.term(merged.find_surface("cell wall").front());
    CHECK(cw.source == "GO");
    CHECK(cw.parse->head_leaf() == 1);

    Terminology reversed = Terminology::merge({&mesh, &go});
    CHECK(reversed.size() == 4);
    const TestifiedTerm& cw2 = reversed.term(reversed.find_surface("cell wall").front());
    CHECK(cw2.source == "MeSH");
    CHECK(cw2.parse->head_leaf() == 0);

    // merge with an empty part is the identity on term content
    Terminology empty;
    Terminology same = Terminology::merge({&go, &empty});
    CHECK(same.size() == go.size());
}

TEST_CASE("terminology keys fold case unless case-sensitive") {
    Terminology folded = terms_from("DNA binding\tNN NN\t-\t-\n");
    CHECK(folded.find_surface("dna binding").size() == 1);
    CHECK(folded.make_key(std::vector<std::string>{"DNA", "Binding"}) == "dna binding");

    Terminology exact = terms_from("DNA binding\tNN NN\t-\t-\n", "src", true);
    CHECK(exact.find_surface("dna binding").empty());
    CHECK(exact.find_surface("DNA binding").size() == 1);
}

TEST_CASE("lemma index can hold several terms for one key") {
    Terminology t = terms_from("genes\t-\tgene\t-\ngene\t-\tgene\t-\n");
    CHECK(t.size() == 2);
    CHECK(t.find_lemma("gene").size() == 2);
    CHECK(t.find_lemma("gene").front() == 0); // load order
}
