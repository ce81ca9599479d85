#ifndef TERMEX_PARSE_TREE_HPP
#define TERMEX_PARSE_TREE_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace termex {

// Binary head-modifier tree over integer leaf labels. Depending on context
// the labels are word positions within a noun phrase, 0-based offsets within
// a testified term, or leaf indices of a matched sequence. Every internal
// node marks exactly one of its two children as the syntactic head; the head
// word of the whole tree is found by following head marks down to a leaf.
class ParseTree {
public:
    ParseTree() = default; // empty (invalid) tree

    static ParseTree leaf(int label);
    static ParseTree branch(ParseTree left, ParseTree right, bool head_is_left);

    bool empty() const { return nodes_.empty(); }
    bool is_leaf() const;
    int leaf_count() const;

    // Leaf labels in left-to-right order.
    std::vector<int> leaves() const;

    // Label of the leaf reached by following head marks from the root.
    int head_leaf() const;

    // New tree with every leaf label l replaced by remap(l).
    ParseTree relabel(const std::function<int(int)>& remap) const;

    // New tree where each leaf whose label is a key of `by_label` is replaced
    // by the mapped subtree. Every key must name an existing leaf; a key with
    // no matching leaf throws std::logic_error.
    ParseTree substitute(const std::map<int, ParseTree>& by_label) const;

    // Bracketed head-marked text, e.g. "((0 1<h>) 2<h>)" with the default
    // labeler or "((transcription factor<h>) binding<h>)" with a labeler
    // mapping positions to words.
    std::string serialize() const;
    std::string serialize(const std::function<std::string(int)>& label) const;

    // Parses the bracketed syntax with non-negative integer leaves, e.g.
    // "(0 1<h>)". Throws std::invalid_argument on malformed input.
    static ParseTree parse_positions(std::string_view text);

    bool operator==(const ParseTree& other) const; // structural equality

    // Calls visit(subtree) for the root and every internal descendant, in
    // preorder. Leaves are not visited.
    void for_each_internal(const std::function<void(const ParseTree&)>& visit) const;

private:
    struct Node {
        int label = -1; // >= 0 for leaves
        int left = -1;
        int right = -1;
        bool head_is_left = false;

        bool is_leaf() const { return label >= 0; }
    };

    int copy_into(std::vector<Node>& dest, int node) const;
    int head_leaf_at(int node) const;
    void collect_leaves(int node, std::vector<int>& out) const;
    bool equal_at(int a, const ParseTree& other, int b) const;
    void serialize_at(int node, bool marked, const std::function<std::string(int)>& label,
                      std::string& out) const;
    ParseTree subtree_at(int node) const;
    void visit_internal(int node, const std::function<void(const ParseTree&)>& visit) const;

    std::vector<Node> nodes_;
    int root_ = -1;
};

} // namespace termex

#endif
