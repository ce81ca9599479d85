#include "termex/chunking_config.hpp"

#include <istream>

#include "termex/errors.hpp"
#include "termex/text_util.hpp"

namespace termex {

bool WordRule::matches(const TaggedWord& w) const {
    if (surface_mode) return w.surface == word;
    return fold_case(w.lemma) == word;
}

bool StructureToken::matches(const TaggedWord& w) const {
    if (!tag.empty() && w.pos != tag) return false;
    if (!word.empty()) {
        if (fold_case(w.surface) != word && fold_case(w.lemma) != word) return false;
    }
    return true;
}

void ChunkingConfig::add_frontier_tag(const std::string& tag) {
    frontier_tags_.insert(tag);
}

void ChunkingConfig::add_frontier_word(WordRule rule, const std::string& tag) {
    frontier_words_.emplace_back(std::move(rule), tag);
}

void ChunkingConfig::add_frontier_tag_exception(const std::string& tag, WordRule rule) {
    frontier_tag_exceptions_[tag].push_back(std::move(rule));
}

void ChunkingConfig::add_allowed_tag_word_exception(const std::string& tag, WordRule rule) {
    allowed_tag_word_exceptions_[tag].push_back(std::move(rule));
}

void ChunkingConfig::add_forbidden_structure(ForbiddenStructure structure) {
    if (structure.tokens.size() > max_structure_length_)
        max_structure_length_ = structure.tokens.size();
    forbidden_structures_.push_back(std::move(structure));
}

bool ChunkingConfig::is_frontier(const TaggedWord& w) const {
    if (frontier_tags_.count(w.pos)) {
        auto it = frontier_tag_exceptions_.find(w.pos);
        if (it != frontier_tag_exceptions_.end())
            for (const WordRule& rule : it->second)
                if (rule.matches(w)) return false;
        return true;
    }
    auto it = allowed_tag_word_exceptions_.find(w.pos);
    if (it != allowed_tag_word_exceptions_.end())
        for (const WordRule& rule : it->second)
            if (rule.matches(w)) return true;
    for (const auto& [rule, tag] : frontier_words_)
        if ((tag.empty() || tag == w.pos) && rule.matches(w)) return true;
    return false;
}

namespace {

// Consumes an optional trailing "surface" token and builds the rule.
WordRule make_rule(std::vector<std::string>& tokens, std::size_t word_at) {
    WordRule rule;
    if (!tokens.empty() && tokens.back() == "surface" && tokens.size() - 1 > word_at) {
        rule.surface_mode = true;
        tokens.pop_back();
    }
    const std::string& w = tokens[word_at];
    rule.word = rule.surface_mode ? w : fold_case(w);
    return rule;
}

} // namespace

ChunkingConfig ChunkingConfig::parse(std::istream& in, const std::string& file_name) {
    ChunkingConfig config;
    // (tag, folded word) pairs seen in allow/forbid directives, for the
    // consistency check; remembered with their line numbers for messages.
    std::map<std::pair<std::string, std::string>, std::size_t> allowed_words;
    std::map<std::pair<std::string, std::string>, std::size_t> forbidden_words;
    std::vector<std::pair<std::string, std::size_t>> allow_lines; // tag, line

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tokens = split_words(line);
        if (tokens.empty()) continue;
        if (tokens[0][0] == '#') continue;

        const std::string& directive = tokens[0];
        if (directive == "frontier") {
            if (tokens.size() == 3 && tokens[1] == "pos") {
                config.add_frontier_tag(tokens[2]);
            } else if (tokens.size() >= 3 && tokens[1] == "word") {
                std::string tag;
                if (tokens.size() >= 5 && tokens[3] == "pos") tag = tokens[4];
                WordRule rule = make_rule(tokens, 2);
                config.add_frontier_word(std::move(rule), tag);
            } else {
                throw ParseError(file_name, line_no,
                                 "expected 'frontier pos <TAG>' or 'frontier word <w> "
                                 "[pos <TAG>] [surface]'");
            }
        } else if (directive == "allow" || directive == "forbid") {
            if (tokens.size() < 5 || tokens[1] != "word" || tokens[3] != "pos")
                throw ParseError(file_name, line_no,
                                 "expected '" + directive + " word <w> pos <TAG> [surface]'");
            std::string tag = tokens[4];
            WordRule rule = make_rule(tokens, 2);
            std::string folded = fold_case(tokens[2]);
            auto key = std::make_pair(tag, folded);
            if (directive == "allow") {
                auto conflict = forbidden_words.find(key);
                if (conflict != forbidden_words.end())
                    throw ParseError(file_name, line_no,
                                     "word '" + tokens[2] + "' already forbidden for tag " +
                                         tag + " at line " +
                                         std::to_string(conflict->second));
                allowed_words.emplace(key, line_no);
                allow_lines.emplace_back(tag, line_no);
                config.add_frontier_tag_exception(tag, std::move(rule));
            } else {
                auto conflict = allowed_words.find(key);
                if (conflict != allowed_words.end())
                    throw ParseError(file_name, line_no,
                                     "word '" + tokens[2] + "' already allowed for tag " +
                                         tag + " at line " +
                                         std::to_string(conflict->second));
                forbidden_words.emplace(key, line_no);
                config.add_allowed_tag_word_exception(tag, std::move(rule));
            }
        } else if (directive == "forbidden-structure") {
            if (tokens.size() < 2)
                throw ParseError(file_name, line_no,
                                 "forbidden-structure needs at least one <word>/<tag> element");
            ForbiddenStructure structure;
            structure.source_line = static_cast<int>(line_no);
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                std::size_t slash = tokens[i].rfind('/');
                if (slash == std::string::npos)
                    throw ParseError(file_name, line_no,
                                     "element '" + tokens[i] + "' is not <word>/<tag>");
                StructureToken token;
                std::string word = tokens[i].substr(0, slash);
                std::string tag = tokens[i].substr(slash + 1);
                if (word != "*") token.word = fold_case(word);
                if (tag != "*") token.tag = tag;
                if (token.word.empty() && token.tag.empty())
                    throw ParseError(file_name, line_no,
                                     "element '" + tokens[i] +
                                         "' constrains neither word nor tag");
                structure.tokens.push_back(std::move(token));
            }
            config.add_forbidden_structure(std::move(structure));
        } else {
            throw ParseError(file_name, line_no, "unknown directive '" + directive + "'");
        }
    }

    // "allow" is an exception to a frontier tag; naming a non-frontier tag
    // is a configuration mistake.
    for (const auto& [tag, at_line] : allow_lines)
        if (!config.frontier_tags_.count(tag))
            throw ParseError(file_name, at_line,
                             "'allow' names tag " + tag + " which is not a frontier tag");

    return config;
}

} // namespace termex
