#include "termex/terminology.hpp"

#include <istream>
#include <stdexcept>

#include "termex/errors.hpp"
#include "termex/text_util.hpp"

namespace termex {

std::string Terminology::normalize_word(std::string_view word) const {
    return case_sensitive_ ? std::string(word) : fold_case(word);
}

std::string Terminology::make_key(std::span<const std::string> words) const {
    std::string key;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) key += ' ';
        key += normalize_word(words[i]);
    }
    return key;
}

void Terminology::index_term(int id) {
    const TestifiedTerm& term = terms_[static_cast<std::size_t>(id)];
    surface_index_[make_key(term.surface_words)].push_back(id);
    if (!term.lemmas.empty()) lemma_index_[make_key(term.lemmas)].push_back(id);
    if (term.length() > max_term_length_) max_term_length_ = term.length();
}

std::span<const int> Terminology::find_surface(const std::string& key) const {
    auto it = surface_index_.find(key);
    if (it == surface_index_.end()) return {};
    return {it->second.data(), it->second.size()};
}

std::span<const int> Terminology::find_lemma(const std::string& key) const {
    auto it = lemma_index_.find(key);
    if (it == lemma_index_.end()) return {};
    return {it->second.data(), it->second.size()};
}

Terminology Terminology::parse(std::istream& in, const std::string& file_name,
                               const std::string& source_name, bool case_sensitive) {
    Terminology out;
    out.case_sensitive_ = case_sensitive;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;

        std::vector<std::string> fields = split_fields(line, '\t');
        if (fields.size() != 4)
            throw ParseError(file_name, line_no,
                             "expected 4 TAB-separated fields, got " +
                                 std::to_string(fields.size()));

        TestifiedTerm term;
        term.source = source_name;
        term.surface_words = split_words(fields[0]);
        if (term.surface_words.empty())
            throw ParseError(file_name, line_no, "empty surface word list");

        if (fields[1] != "-") {
            term.pos_tags = split_words(fields[1]);
            if (term.pos_tags.size() != term.length())
                throw ParseError(file_name, line_no,
                                 "POS tag count (" + std::to_string(term.pos_tags.size()) +
                                     ") does not match word count (" +
                                     std::to_string(term.length()) + ")");
        }
        if (fields[2] != "-") {
            term.lemmas = split_words(fields[2]);
            if (term.lemmas.size() != term.length())
                throw ParseError(file_name, line_no,
                                 "lemma count (" + std::to_string(term.lemmas.size()) +
                                     ") does not match word count (" +
                                     std::to_string(term.length()) + ")");
        }
        if (fields[3] != "-") {
            ParseTree parse;
            try {
                parse = ParseTree::parse_positions(fields[3]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(file_name, line_no, e.what());
            }
            std::vector<int> leaves = parse.leaves();
            bool covers = leaves.size() == term.length();
            for (std::size_t i = 0; covers && i < leaves.size(); ++i)
                covers = leaves[i] == static_cast<int>(i);
            if (!covers)
                throw ParseError(file_name, line_no,
                                 "parse tree must cover word positions 0.." +
                                     std::to_string(term.length() - 1) + " in order");
            term.parse = std::move(parse);
        }

        std::string key = out.make_key(term.surface_words);
        if (!out.surface_index_.count(key)) {
            int id = static_cast<int>(out.terms_.size());
            out.terms_.push_back(std::move(term));
            out.index_term(id);
        }
        // duplicate surface key: first entry wins, later ones are dropped
    }
    return out;
}

Terminology Terminology::merge(const std::vector<const Terminology*>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge requires at least one terminology");
    Terminology out;
    out.case_sensitive_ = parts.front()->case_sensitive_;
    for (const Terminology* part : parts)
        if (part->case_sensitive_ != out.case_sensitive_)
            throw std::invalid_argument("cannot merge terminologies with different "
                                        "case-sensitivity modes");
    for (const Terminology* part : parts) {
        for (const TestifiedTerm& term : part->terms_) {
            std::string key = out.make_key(term.surface_words);
            if (out.surface_index_.count(key)) continue;
            int id = static_cast<int>(out.terms_.size());
            out.terms_.push_back(term);
            out.index_term(id);
        }
    }
    return out;
}

} // namespace termex
