#include "termex/corpus.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "termex/errors.hpp"
#include "termex/text_util.hpp"

namespace termex {

namespace {

void check_token_field(const std::string& file, std::size_t line_no,
                       const std::string& field, const char* what) {
    if (field.empty())
        throw ParseError(file, line_no, std::string("empty ") + what + " field");
    if (contains_whitespace(field))
        throw ParseError(file, line_no,
                         std::string(what) + " field contains whitespace: '" + field + "'");
}

} // namespace

Corpus parse_vertical_corpus(std::istream& in, const std::string& file_name) {
    Corpus corpus;
    Sentence current;
    std::string line;
    std::size_t line_no = 0;

    auto flush_sentence = [&]() {
        if (current.words.empty()) return;
        current.id = static_cast<int>(corpus.sentences.size());
        corpus.word_count += current.words.size();
        corpus.sentences.push_back(std::move(current));
        current = Sentence{};
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush_sentence();
            continue;
        }
        if (line[0] == '#') continue;
        std::vector<std::string> fields = split_fields(line, '\t');
        if (fields.size() != 3)
            throw ParseError(file_name, line_no,
                             "expected 3 TAB-separated fields, got " +
                                 std::to_string(fields.size()));
        check_token_field(file_name, line_no, fields[0], "surface");
        check_token_field(file_name, line_no, fields[1], "pos");
        check_token_field(file_name, line_no, fields[2], "lemma");
        TaggedWord word;
        word.surface = std::move(fields[0]);
        word.pos = std::move(fields[1]);
        word.lemma = std::move(fields[2]);
        word.index = static_cast<int>(current.words.size());
        current.words.push_back(std::move(word));
    }
    flush_sentence();

    if (corpus.sentences.empty())
        throw ParseError(file_name, 0, "empty corpus");
    return corpus;
}

Corpus parse_vertical_corpus_text(std::string_view text, const std::string& file_name) {
    std::istringstream in{std::string(text)};
    return parse_vertical_corpus(in, file_name);
}

void serialize_corpus(const Corpus& corpus, std::ostream& out) {
    for (const Sentence& sentence : corpus.sentences) {
        for (const TaggedWord& word : sentence.words) {
            for (const std::string* field : {&word.surface, &word.pos, &word.lemma}) {
                if (field->empty() || contains_whitespace(*field))
                    throw std::invalid_argument("unserializable token field: '" + *field + "'");
            }
            if (word.surface[0] == '#')
                throw std::invalid_argument(
                    "surface starting with '#' cannot be serialized: '" + word.surface + "'");
            out << word.surface << '\t' << word.pos << '\t' << word.lemma << '\n';
        }
        out << '\n';
    }
}

std::string serialize_corpus(const Corpus& corpus) {
    std::ostringstream out;
    serialize_corpus(corpus, out);
    return out.str();
}

ValidationReport validate_tagset(const Corpus& corpus, const TagSet& tagset) {
    std::map<std::string, std::size_t> unknown;
    for (const Sentence& sentence : corpus.sentences)
        for (const TaggedWord& word : sentence.words)
            if (!tagset.tags.count(word.pos)) ++unknown[word.pos];

    ValidationReport report;
    report.unknown_tags.reserve(unknown.size());
    for (const auto& [tag, count] : unknown)
        report.unknown_tags.push_back(TagCount{tag, count});
    return report;
}

const TagSet& penn_treebank_tagset() {
    static const TagSet tagset{
        "PennTreebank",
        {
            "CC", "CD",  "DT",  "EX",  "FW",   "IN",   "JJ",  "JJR", "JJS",
            "LS", "MD",  "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP",
            "PRP$", "RB", "RBR", "RBS", "RP",  "SYM",  "TO",  "UH",  "VB",
            "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT",  "WP",  "WP$", "WRB",
            ".", ",", ":", "(", ")", "``", "''", "$", "#",
        }};
    return tagset;
}

} // namespace termex
