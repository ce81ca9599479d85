#include "termex/parse_tree.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace termex {

ParseTree ParseTree::leaf(int label) {
    if (label < 0) throw std::invalid_argument("leaf label must be non-negative");
    ParseTree t;
    t.nodes_.push_back(Node{label, -1, -1, false});
    t.root_ = 0;
    return t;
}

ParseTree ParseTree::branch(ParseTree left, ParseTree right, bool head_is_left) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("branch requires two non-empty subtrees");
    ParseTree t;
    int l = left.copy_into(t.nodes_, left.root_);
    int r = right.copy_into(t.nodes_, right.root_);
    t.nodes_.push_back(Node{-1, l, r, head_is_left});
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    return t;
}

int ParseTree::copy_into(std::vector<Node>& dest, int node) const {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    if (n.is_leaf()) {
        dest.push_back(n);
        return static_cast<int>(dest.size()) - 1;
    }
    int l = copy_into(dest, n.left);
    int r = copy_into(dest, n.right);
    dest.push_back(Node{-1, l, r, n.head_is_left});
    return static_cast<int>(dest.size()) - 1;
}

bool ParseTree::is_leaf() const {
    return root_ >= 0 && nodes_[static_cast<std::size_t>(root_)].is_leaf();
}

int ParseTree::leaf_count() const {
    return static_cast<int>(leaves().size());
}

void ParseTree::collect_leaves(int node, std::vector<int>& out) const {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    if (n.is_leaf()) {
        out.push_back(n.label);
        return;
    }
    collect_leaves(n.left, out);
    collect_leaves(n.right, out);
}

std::vector<int> ParseTree::leaves() const {
    std::vector<int> out;
    if (root_ >= 0) collect_leaves(root_, out);
    return out;
}

int ParseTree::head_leaf_at(int node) const {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    if (n.is_leaf()) return n.label;
    return head_leaf_at(n.head_is_left ? n.left : n.right);
}

int ParseTree::head_leaf() const {
    if (empty()) throw std::logic_error("head_leaf on empty tree");
    return head_leaf_at(root_);
}

ParseTree ParseTree::relabel(const std::function<int(int)>& remap) const {
    ParseTree t = *this;
    for (Node& n : t.nodes_)
        if (n.is_leaf()) n.label = remap(n.label);
    return t;
}

ParseTree ParseTree::subtree_at(int node) const {
    ParseTree t;
    t.root_ = copy_into(t.nodes_, node);
    return t;
}

ParseTree ParseTree::substitute(const std::map<int, ParseTree>& by_label) const {
    if (by_label.empty()) return *this;
    std::set<int> leaf_labels;
    for (int l : leaves()) leaf_labels.insert(l);
    for (const auto& [label, tree] : by_label) {
        if (!leaf_labels.count(label))
            throw std::logic_error("substitution references a non-leaf position " +
                                   std::to_string(label));
        if (tree.empty())
            throw std::logic_error("substitution with empty tree at position " +
                                   std::to_string(label));
    }

    std::function<ParseTree(int)> rebuild = [&](int node) -> ParseTree {
        const Node& n = nodes_[static_cast<std::size_t>(node)];
        if (n.is_leaf()) {
            auto it = by_label.find(n.label);
            if (it != by_label.end()) return it->second;
            return ParseTree::leaf(n.label);
        }
        return ParseTree::branch(rebuild(n.left), rebuild(n.right), n.head_is_left);
    };
    return rebuild(root_);
}

bool ParseTree::equal_at(int a, const ParseTree& other, int b) const {
    const Node& na = nodes_[static_cast<std::size_t>(a)];
    const Node& nb = other.nodes_[static_cast<std::size_t>(b)];
    if (na.is_leaf() != nb.is_leaf()) return false;
    if (na.is_leaf()) return na.label == nb.label;
    if (na.head_is_left != nb.head_is_left) return false;
    return equal_at(na.left, other, nb.left) && equal_at(na.right, other, nb.right);
}

bool ParseTree::operator==(const ParseTree& other) const {
    if (empty() || other.empty()) return empty() == other.empty();
    return equal_at(root_, other, other.root_);
}

void ParseTree::serialize_at(int node, bool marked,
                             const std::function<std::string(int)>& label,
                             std::string& out) const {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    if (n.is_leaf()) {
        out += label(n.label);
    } else {
        out += '(';
        serialize_at(n.left, n.head_is_left, label, out);
        out += ' ';
        serialize_at(n.right, !n.head_is_left, label, out);
        out += ')';
    }
    if (marked) out += "<h>";
}

std::string ParseTree::serialize(const std::function<std::string(int)>& label) const {
    if (empty()) return "";
    std::string out;
    serialize_at(root_, false, label, out);
    return out;
}

std::string ParseTree::serialize() const {
    return serialize([](int l) { return std::to_string(l); });
}

void ParseTree::visit_internal(int node,
                               const std::function<void(const ParseTree&)>& visit) const {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    if (n.is_leaf()) return;
    visit(subtree_at(node));
    visit_internal(n.left, visit);
    visit_internal(n.right, visit);
}

void ParseTree::for_each_internal(const std::function<void(const ParseTree&)>& visit) const {
    if (root_ >= 0) visit_internal(root_, visit);
}

namespace {

// Recursive-descent parser for the position form of the bracketed syntax:
//   tree  := group
//   group := '(' item item ')'
//   item  := (INT | group) ['<h>']
// Exactly one item of each group must carry the head mark.
struct PositionParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("parse tree syntax error at offset " +
                                    std::to_string(pos) + ": " + message);
    }

    bool try_head_mark() {
        if (text.substr(pos, 3) == "<h>") {
            pos += 3;
            return true;
        }
        return false;
    }

    ParseTree parse_item(bool& marked) {
        skip_spaces();
        ParseTree t;
        if (pos < text.size() && text[pos] == '(') {
            t = parse_group();
        } else {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == start) fail("expected integer leaf or '('");
            t = ParseTree::leaf(std::atoi(std::string(text.substr(start, pos - start)).c_str()));
        }
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
        if (pos >= text.size() || text[pos] != ')') fail("expected ')' (nodes are binary)");
        ++pos;
        if (left_marked == right_marked)
            fail(left_marked ? "both children carry the head mark"
                             : "no child carries the head mark");
        return ParseTree::branch(std::move(left), std::move(right), left_marked);
    }

    ParseTree parse() {
        ParseTree t = parse_group();
        skip_spaces();
        if (try_head_mark()) fail("head mark on the root is meaningless");
        skip_spaces();
        if (pos != text.size()) fail("trailing characters");
        return t;
    }
};

} // namespace

ParseTree ParseTree::parse_positions(std::string_view text) {
    PositionParser parser{text};
    return parser.parse();
}

} // namespace termex
