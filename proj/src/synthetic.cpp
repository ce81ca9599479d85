#include "termex/synthetic.hpp"

#include <random>
#include <unordered_set>
#include <vector>

namespace termex {

namespace {

std::vector<std::string> make_nouns() {
    static const char* stems[] = {
        "factor", "gene",   "operon",  "promoter", "protein", "kinase",  "site",
        "region", "domain", "complex", "pathway",  "signal",  "response", "cluster",
        "enzyme", "subunit", "repressor", "activator", "sequence", "element",
    };
    std::vector<std::string> nouns;
    for (const char* stem : stems)
        for (int i = 0; i < 10; ++i) nouns.push_back(std::string(stem) + char('a' + i));
    return nouns; // 200 distinct nouns
}

std::vector<std::string> make_adjectives() {
    return {"novel",   "small",  "large",  "specific", "putative", "major",
            "minor",   "global", "native", "mutant",   "distal",   "proximal",
            "cryptic", "dual",   "late",   "early"};
}

std::vector<std::string> make_verbs() {
    return {"binds",     "activates", "represses", "controls", "encodes",
            "regulates", "requires",  "induces",   "inhibits", "modulates"};
}

} // namespace

std::string make_synthetic_corpus_text(const SyntheticSpec& spec) {
    const std::vector<std::string> nouns = make_nouns();
    const std::vector<std::string> adjectives = make_adjectives();
    const std::vector<std::string> verbs = make_verbs();

    std::mt19937 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> noun_at(0, nouns.size() - 1);
    std::uniform_int_distribution<std::size_t> adj_at(0, adjectives.size() - 1);
    std::uniform_int_distribution<std::size_t> verb_at(0, verbs.size() - 1);
    std::uniform_int_distribution<int> coin(0, 99);

    std::string out;
    out.reserve(spec.target_words * 24);
    std::size_t words = 0;

    auto emit = [&](const std::string& surface, const char* tag, const std::string& lemma) {
        out += surface;
        out += '\t';
        out += tag;
        out += '\t';
        out += lemma;
        out += '\n';
        ++words;
    };
    auto emit_noun_phrase = [&]() {
        if (coin(rng) < 60) emit("the", "DT", "the");
        if (coin(rng) < 30) {
            const std::string& adj = adjectives[adj_at(rng)];
            emit(adj, "JJ", adj);
        }
        int nouns_here = 1 + (coin(rng) < 55 ? 1 : 0) + (coin(rng) < 25 ? 1 : 0) +
                         (coin(rng) < 10 ? 1 : 0);
        for (int i = 0; i < nouns_here; ++i) {
            const std::string& noun = nouns[noun_at(rng)];
            if (coin(rng) < 12) {
                emit(noun + "s", "NNS", noun);
            } else {
                emit(noun, "NN", noun);
            }
        }
        if (coin(rng) < 15) {
            emit("of", "IN", "of");
            const std::string& noun = nouns[noun_at(rng)];
            emit(noun, "NN", noun);
        }
    };

    while (words < spec.target_words) {
        emit_noun_phrase();
        const std::string& verb = verbs[verb_at(rng)];
        emit(verb, "VBZ", verb.substr(0, verb.size() - 1));
        emit_noun_phrase();
        if (coin(rng) < 20) {
            emit("in", "IN", "in");
            emit_noun_phrase();
        }
        emit(".", ".", ".");
        out += '\n';
    }
    return out;
}

std::string make_synthetic_terminology_text(const SyntheticSpec& spec) {
    const std::vector<std::string> nouns = make_nouns();
    // A different stream from the corpus generator so term coverage is
    // partial, as with real resources.
    std::mt19937 rng(spec.seed + 0x9e37);
    std::uniform_int_distribution<std::size_t> noun_at(0, nouns.size() - 1);
    std::uniform_int_distribution<int> coin(0, 99);

    std::string out;
    std::unordered_set<std::string> seen;
    std::size_t emitted = 0;
    while (emitted < spec.terminology_terms) {
        const std::string& a = nouns[noun_at(rng)];
        const std::string& b = nouns[noun_at(rng)];
        if (a == b) continue;
        bool three = coin(rng) < 25;
        std::string c = three ? nouns[noun_at(rng)] : std::string();
        std::string key = a + ' ' + b + (three ? ' ' + c : std::string());
        if (!seen.insert(key).second) continue;
        out += key;
        out += '\t';
        out += three ? "NN NN NN" : "NN NN";
        out += '\t';
        out += key;
        out += '\t';
        if (three) {
            out += coin(rng) < 50 ? "((0 1<h>) 2<h>)" : "-";
        } else {
            out += coin(rng) < 50 ? "(0 1<h>)" : "-";
        }
        out += '\n';
        ++emitted;
    }
    return out;
}

} // namespace termex
