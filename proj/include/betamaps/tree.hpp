#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace betamaps {

// Rooted plane tree with nonnegative integer labels. A whole value is a
// beta(0,1)-tree when the three label rules hold:
//   1. every leaf has label 0;
//   2. the root label is one more than the sum of its children's labels
//      (the single-node tree has root label 0);
//   3. every other label is at most one more than the sum of its children's
//      labels.
// Subtrees of a valid tree are not themselves valid trees (the root rule
// differs), so construction of checked values goes through parse_tree or
// validate_tree.
//
// Copy, compare and destroy are iterative: path-shaped trees with millions of
// nodes must not exhaust the call stack.
struct BetaTree {
    int label = 0;
    std::vector<BetaTree> children;

    BetaTree() = default;
    explicit BetaTree(int lab) : label(lab) {}
    BetaTree(int lab, std::vector<BetaTree> kids)
        : label(lab), children(std::move(kids)) {}

    BetaTree(const BetaTree& other);
    BetaTree(BetaTree&&) noexcept = default;
    BetaTree& operator=(const BetaTree& other);
    BetaTree& operator=(BetaTree&&) noexcept = default;
    ~BetaTree();

    bool is_leaf() const { return children.empty(); }
    // The trivial tree is the single node; as a whole-tree query this is just
    // leaf-ness.
    bool is_trivial() const { return children.empty(); }

    bool operator==(const BetaTree& other) const;
    bool operator!=(const BetaTree& other) const { return !(*this == other); }
};

// Sequence of child indices from the root.
using NodePath = std::vector<int>;

struct StatVector {
    int root = 0;
    int sub = 0;
    int rzero = 0;
    int rmod = 0;
    int open = 0;
    int exc = 0;
    int nodes = 0;
    int edges = 0;

    bool operator==(const StatVector&) const = default;
};

enum class TreeRule { leaf_label, root_label, node_label };

struct TreeViolation {
    NodePath path;
    TreeRule rule;
    std::string message;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
};

class ValidationError : public std::runtime_error {
  public:
    ValidationError(const std::string& what, std::vector<TreeViolation> v)
        : std::runtime_error(what), violations(std::move(v)) {}
    std::vector<TreeViolation> violations;
};

// Canonical text grammar:  tree := "(" label { " " tree } ")".
// parse_tree decodes and fully validates; parse_raw_tree only decodes.
BetaTree parse_tree(std::string_view text);
BetaTree parse_raw_tree(std::string_view text);

// Canonical single-space-separated form; parse_tree(render_tree(t)) == t.
std::string render_tree(const BetaTree& t);

// Empty result iff the three label rules hold.
std::vector<TreeViolation> validate_tree(const BetaTree& raw);
bool is_valid_tree(const BetaTree& t);

// Number of nodes.
int tree_size(const BetaTree& t);

// Sum of the labels of the immediate children.
int child_label_sum(const BetaTree& t);

// label > sum of children's labels ("excessive"); moderate otherwise.
bool is_excessive(const BetaTree& t);

// All eight statistics. Conventions for the trivial tree: everything 0
// except nodes = 1.
StatVector statistics(const BetaTree& t);

// Paths of the open nodes on the rightmost path, ordered root to leaf.
// A node on the rightmost path is open when its rightmost child is a
// non-leaf moderate node; the rightmost leaf is always open.
// Throws on the trivial tree (no rightmost path below the root).
std::vector<NodePath> open_nodes(const BetaTree& t);

const BetaTree& node_at(const BetaTree& t, const NodePath& path);

} // namespace betamaps
