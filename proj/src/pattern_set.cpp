#include "termex/pattern_set.hpp"

#include <istream>
#include <stdexcept>
#include <unordered_set>

#include "termex/errors.hpp"
#include "termex/text_util.hpp"

namespace termex {

ParsingPattern::ParsingPattern(ParseTree shape, std::vector<PatternLeaf> leaves,
                               int content_word_count, int source_line)
    : shape_(std::move(shape)),
      leaves_(std::move(leaves)),
      content_word_count_(content_word_count),
      source_line_(source_line) {}

std::string ParsingPattern::tag_key() const {
    std::string key;
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        if (i > 0) key += ' ';
        key += leaves_[i].tag;
    }
    return key;
}

std::string ParsingPattern::canonical() const {
    return shape_.serialize([&](int i) {
        const PatternLeaf& leaf = leaves_[static_cast<std::size_t>(i)];
        if (leaf.lemma.empty()) return leaf.tag;
        return leaf.tag + "=" + leaf.lemma;
    });
}

namespace {

// Recursive-descent parser for the pattern form of the bracketed syntax:
//   pattern := group
//   group   := '(' item item ')'
//   item    := (atom | group) ['<h>']
//   atom    := TAG['=' lemma]
struct PatternParser {
    std::string_view text;
    std::size_t pos = 0;
    std::vector<PatternLeaf> leaves;

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument(message);
    }

    void skip_spaces() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }

    bool try_head_mark() {
        if (text.substr(pos, 3) == "<h>") {
            pos += 3;
            return true;
        }
        return false;
    }

    static bool is_atom_char(char c) {
        return c != ' ' && c != '(' && c != ')' && c != '<' && c != '=';
    }

    ParseTree parse_atom() {
        std::size_t start = pos;
        while (pos < text.size() && is_atom_char(text[pos])) ++pos;
        if (pos == start) fail("expected POS tag or '('");
        PatternLeaf leaf;
        leaf.tag = std::string(text.substr(start, pos - start));
        if (pos < text.size() && text[pos] == '=') {
            ++pos;
            std::size_t lstart = pos;
            while (pos < text.size() && is_atom_char(text[pos])) ++pos;
            if (pos == lstart) fail("empty lemma anchor after '='");
            leaf.lemma = fold_case(text.substr(lstart, pos - lstart));
        }
        leaves.push_back(std::move(leaf));
        return ParseTree::leaf(static_cast<int>(leaves.size()) - 1);
    }

    ParseTree parse_item(bool& marked) {
        skip_spaces();
        ParseTree t;
        if (pos < text.size() && text[pos] == '(')
            t = parse_group();
        else
            t = parse_atom();
        marked = try_head_mark();
        return t;
    }

    ParseTree parse_group() {
        skip_spaces();
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        bool left_marked = false;
        bool right_marked = false;
        ParseTree left = parse_item(left_marked);
        ParseTree right = parse_item(right_marked);
        skip_spaces();
        if (pos < text.size() && text[pos] != ')')
            fail("nodes are binary: expected ')' after two children");
        if (pos >= text.size()) fail("unbalanced brackets: missing ')'");
        ++pos;
        if (left_marked && right_marked) fail("two head marks in one node");
        if (!left_marked && !right_marked) fail("zero head marks in a node");
        return ParseTree::branch(std::move(left), std::move(right), left_marked);
    }

    ParseTree parse() {
        skip_spaces();
        ParseTree t = parse_group();
        skip_spaces();
        if (try_head_mark()) fail("head mark on the root is meaningless");
        skip_spaces();
        if (pos != text.size()) fail("trailing characters after pattern");
        return t;
    }
};

} // namespace

const std::set<std::string>& PatternSet::default_content_tags() {
    static const std::set<std::string> tags{"NN", "NNS", "NNP", "NNPS", "JJ", "FW"};
    return tags;
}

PatternSet PatternSet::parse(std::istream& in, const std::string& file_name) {
    return parse(in, file_name, default_content_tags(), 0);
}

PatternSet PatternSet::parse(std::istream& in, const std::string& file_name,
                             const std::set<std::string>& content_tags,
                             int max_content_words) {
    PatternSet set;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(' ');
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        PatternParser parser{line, 0, {}};
        ParseTree shape;
        try {
            shape = parser.parse();
        } catch (const std::invalid_argument& e) {
            throw ParseError(file_name, line_no, e.what());
        }
        if (parser.leaves.size() < 2)
            throw ParseError(file_name, line_no,
                             "patterns need at least 2 leaves; single words are never "
                             "pattern-parsed");
        int content = 0;
        for (const PatternLeaf& leaf : parser.leaves)
            if (content_tags.count(leaf.tag)) ++content;
        if (max_content_words > 0 && content > max_content_words)
            throw ParseError(file_name, line_no,
                             "pattern has " + std::to_string(content) +
                                 " content words, limit is " +
                                 std::to_string(max_content_words));

        ParsingPattern pattern(std::move(shape), std::move(parser.leaves), content,
                               static_cast<int>(line_no));
        if (!seen.insert(pattern.canonical()).second)
            throw ParseError(file_name, line_no,
                             "duplicate pattern " + pattern.canonical());

        int id = static_cast<int>(set.patterns_.size());
        set.by_tag_key_[pattern.tag_key()].push_back(id);
        if (pattern.leaf_count() > set.max_leaf_count_)
            set.max_leaf_count_ = pattern.leaf_count();
        set.patterns_.push_back(std::move(pattern));
    }
    return set;
}

std::span<const int> PatternSet::candidates(const std::string& tag_key) const {
    auto it = by_tag_key_.find(tag_key);
    if (it == by_tag_key_.end()) return {};
    return {it->second.data(), it->second.size()};
}

} // namespace termex
